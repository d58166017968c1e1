#pragma once

#include <vector>

#include "rpk/errors.hpp"
#include "rpk/math/interpolation.hpp"

namespace rpk {

// Discount-factor term structure. Monotone cubic Hermite on log-discount,
// constant-forward extrapolation beyond the last pillar. P(0) = 1.
class DiscountCurve {
public:
    DiscountCurve();  // flat P(t) = 1
    DiscountCurve(std::vector<double> pillars, std::vector<double> discounts);

    static DiscountCurve flat_rate(double r, double t_max = 40.0);
    static DiscountCurve from_zero_rates(const std::vector<double>& pillars,
                                         const std::vector<double>& rates);

    double operator()(double t) const;
    double zero_rate(double t) const;

    const std::vector<double>& pillars() const { return pillars_; }
    const std::vector<double>& discounts() const { return discounts_; }

private:
    std::vector<double> pillars_, discounts_;
    math::HermiteSpline log_spline_;
    double end_slope_ = 0;  // d(log P)/dt at the last pillar
};

// Zero-coupon inflation forward curve: pillar rates kbar with
// P_IL(0,T) = P_N(0,T) / (1+kbar(T))^T.
class InflationForwardCurve {
public:
    InflationForwardCurve() = default;
    InflationForwardCurve(std::vector<double> pillars, std::vector<double> zc_rates);

    double rate(double t) const;
    const std::vector<double>& pillars() const { return pillars_; }
    const std::vector<double>& rates() const { return rates_; }

    DiscountCurve implied_il_curve(const DiscountCurve& nominal) const;

private:
    std::vector<double> pillars_, rates_;
    math::HermiteSpline spline_;
};

DiscountCurve il_curve_from_zc_rates(const DiscountCurve& nominal,
                                     const InflationForwardCurve& zc);

// Initial forward-LIBOR curve for one tenor: t -> L(0, t, t+tenor).
class LiborCurve {
public:
    LiborCurve() = default;
    LiborCurve(double tenor, std::vector<double> reset_dates, std::vector<double> rates);

    // single-curve consistent forwards off a discount curve
    static LiborCurve from_discount(const DiscountCurve& curve, double tenor,
                                    double t_max = 40.0);

    double tenor() const { return tenor_; }
    double operator()(double reset) const;

private:
    double tenor_ = 0.25;
    math::HermiteSpline spline_;
};

}  // namespace rpk
