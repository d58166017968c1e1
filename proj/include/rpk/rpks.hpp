#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rpk/additive_spec.hpp"
#include "rpk/curves.hpp"
#include "rpk/math/interpolation.hpp"

namespace rpk {

// Valuation-time state of the three exponential factors, plus realized
// S-factor levels at past dates for seasoned trades (YoY periods already
// started, LPI base dates).
struct MarketState {
    double t = 0;
    double A_S = 1, A_R = 1, A_L = 1;
    std::map<double, double> fixings;  // date -> realized A^S level

    static MarketState initial() { return {}; }

    double fixing(double date) const;
    bool has_fixing(double date) const;

    // driver coordinates X_t implied by the factor levels
    Vec3 x(const WeightVectors& w) const;
};

struct KernelValue {
    double hN = 1, hR = 1, s = 1;
};

// The model: initial curves fitted exactly by construction, the real-kernel
// mixing function b^R, the driver spec, and (optionally) the multi-curve block.
class RpksParams {
public:
    RpksParams(DiscountCurve nominal, DiscountCurve il, math::HermiteSpline bR,
               AdditiveSpec spec);

    const DiscountCurve& nominal_curve() const { return nominal_; }
    const DiscountCurve& il_curve() const { return il_; }
    const math::HermiteSpline& bR_spline() const { return bR_; }
    const AdditiveSpec& spec() const { return spec_; }
    AdditiveSpec& spec() { return spec_; }
    const WeightVectors& weights() const { return spec_.weights(); }

    void set_bR(math::HermiteSpline bR) { bR_ = std::move(bR); }
    void set_spec(AdditiveSpec spec) { spec_ = std::move(spec); }

    double R(double t) const { return il_(t); }
    double bR(double t) const { return bR_(t); }
    // Cov[A^R_t, A^S_t] from the Laplace exponent
    double cov0(double t) const;
    // S fitted so the model reproduces the nominal curve exactly
    double S(double t) const;

    // multi-curve block
    void set_libor(LiborCurve l0, math::StepFunction bl_tilde);
    bool has_libor() const { return libor0_.has_value(); }
    const LiborCurve& libor0() const;
    const math::StepFunction& bL_tilde() const;
    math::StepFunction& bL_tilde();
    // b^L(T0, T0+tenor) = P^N(0,T0) L(0,T0,T0+tenor) + btilde_L(T0)
    double bL(double reset) const;

private:
    DiscountCurve nominal_, il_;
    math::HermiteSpline bR_;
    AdditiveSpec spec_;
    std::optional<LiborCurve> libor0_;
    std::optional<math::StepFunction> bL_tilde_;
};

// flat b^R over [0, 30] on the standard eight knots
math::HermiteSpline flat_bR(double level);

KernelValue kernel_values(const RpksParams& p, const MarketState& s);

double nominal_bond(const RpksParams& p, const MarketState& s, double T);
double inflation_linked_bond(const RpksParams& p, const MarketState& s, double T);
double real_bond(const RpksParams& p, const MarketState& s, double T);
double cpi_level(const RpksParams& p, const MarketState& s);  // C_t, C_0 = 1

double zc_swap_price(const RpksParams& p, const MarketState& s, double T, double K);
double zc_fair_rate(const RpksParams& p, double T);

// floating-leg value and fixed-leg annuity of one YoY swaplet paying
// C_{T1}/C_{T0} - K at T1; price(K) = floating - K * annuity
struct SwapletValue {
    double floating = 0;
    double annuity = 0;
    double price(double K) const { return floating - K * annuity; }
};
SwapletValue yoy_swaplet_price(const RpksParams& p, const MarketState& s, double T0,
                               double T1);

// floating value of the time-lagged swaplet paying C_{T1}/C_{T0} at T >= T1
double yoy_swaplet_floating_lagged(const RpksParams& p, const MarketState& s, double T0,
                                   double T1, double T);

double yoy_fair_rate(const RpksParams& p, const MarketState& s,
                     const std::vector<double>& schedule);
double yoy_fair_rate_independent(const DiscountCurve& nominal, const DiscountCurve& il,
                                 const std::vector<double>& schedule);
double yoy_convexity(const RpksParams& p, const std::vector<double>& schedule);

// payoff a1 + a2 C_T paid at T
double affine_payoff_price(const RpksParams& p, const MarketState& s, double T, double a1,
                           double a2);

// spec-contract fit helpers; RpksParams applies them implicitly
DiscountCurve fit_R(const DiscountCurve& il_market);
DiscountCurve fit_S(const RpksParams& p, const std::vector<double>& grid);

}  // namespace rpk
