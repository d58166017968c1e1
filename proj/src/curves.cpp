#include "rpk/curves.hpp"

#include <cmath>

namespace rpk {

DiscountCurve::DiscountCurve() : DiscountCurve({1.0, 2.0}, {1.0, 1.0}) {}

DiscountCurve::DiscountCurve(std::vector<double> pillars, std::vector<double> discounts)
    : pillars_(std::move(pillars)), discounts_(std::move(discounts)) {
    if (pillars_.size() != discounts_.size() || pillars_.empty())
        throw NonPositiveCurve("DiscountCurve: pillar/value size mismatch");
    std::vector<double> x, y;
    if (pillars_.front() > 0) {
        x.push_back(0.0);
        y.push_back(0.0);
    } else if (pillars_.front() == 0) {
        if (std::fabs(discounts_.front() - 1.0) > 1e-14)
            throw NonPositiveCurve("DiscountCurve: P(0) must be 1");
    } else {
        throw NonPositiveCurve("DiscountCurve: negative pillar");
    }
    for (std::size_t i = 0; i < pillars_.size(); ++i) {
        if (!(discounts_[i] > 0)) throw NonPositiveCurve("DiscountCurve: discount <= 0");
        x.push_back(pillars_[i]);
        y.push_back(std::log(discounts_[i]));
    }
    log_spline_ = math::HermiteSpline(x, y, math::HermiteSpline::Slopes::Monotone);
    std::size_t n = x.size();
    end_slope_ = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
}

DiscountCurve DiscountCurve::flat_rate(double r, double t_max) {
    return DiscountCurve({t_max}, {std::exp(-r * t_max)});
}

DiscountCurve DiscountCurve::from_zero_rates(const std::vector<double>& pillars,
                                             const std::vector<double>& rates) {
    if (pillars.size() != rates.size())
        throw NonPositiveCurve("from_zero_rates: size mismatch");
    std::vector<double> d(pillars.size());
    for (std::size_t i = 0; i < pillars.size(); ++i) d[i] = std::exp(-rates[i] * pillars[i]);
    return DiscountCurve(pillars, d);
}

double DiscountCurve::operator()(double t) const {
    if (t < 0) throw NegativeTime("DiscountCurve: t < 0");
    if (t == 0) return 1.0;
    const auto& kx = log_spline_.knots();
    if (t > kx.back())
        return std::exp(log_spline_(kx.back()) + end_slope_ * (t - kx.back()));
    return std::exp(log_spline_(t));
}

double DiscountCurve::zero_rate(double t) const {
    if (t <= 0) throw NegativeTime("zero_rate: t <= 0");
    return -std::log((*this)(t)) / t;
}

InflationForwardCurve::InflationForwardCurve(std::vector<double> pillars,
                                             std::vector<double> zc_rates)
    : pillars_(std::move(pillars)), rates_(std::move(zc_rates)) {
    if (pillars_.size() != rates_.size() || pillars_.size() < 2)
        throw NonPositiveCurve("InflationForwardCurve: need >=2 pillars");
    spline_ = math::HermiteSpline(pillars_, rates_, math::HermiteSpline::Slopes::Monotone);
}

double InflationForwardCurve::rate(double t) const { return spline_(t); }

DiscountCurve InflationForwardCurve::implied_il_curve(const DiscountCurve& nominal) const {
    std::vector<double> d(pillars_.size());
    for (std::size_t i = 0; i < pillars_.size(); ++i) {
        double t = pillars_[i];
        d[i] = nominal(t) / std::pow(1.0 + rates_[i], t);
        if (!(d[i] > 0)) throw NonPositiveCurve("implied_il_curve: nonpositive P_IL");
    }
    return DiscountCurve(pillars_, d);
}

DiscountCurve il_curve_from_zc_rates(const DiscountCurve& nominal,
                                     const InflationForwardCurve& zc) {
    return zc.implied_il_curve(nominal);
}

LiborCurve::LiborCurve(double tenor, std::vector<double> reset_dates,
                       std::vector<double> rates)
    : tenor_(tenor) {
    if (!(tenor > 0)) throw Error("LiborCurve: tenor must be positive");
    spline_ = math::HermiteSpline(std::move(reset_dates), std::move(rates),
                                  math::HermiteSpline::Slopes::Monotone);
}

LiborCurve LiborCurve::from_discount(const DiscountCurve& curve, double tenor, double t_max) {
    std::vector<double> resets, rates;
    for (double t = 0; t <= t_max + 1e-9; t += tenor) {
        resets.push_back(t);
        rates.push_back((curve(t) / curve(t + tenor) - 1.0) / tenor);
    }
    return LiborCurve(tenor, std::move(resets), std::move(rates));
}

double LiborCurve::operator()(double reset) const { return spline_(reset); }

}  // namespace rpk
