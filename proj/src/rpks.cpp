#include "rpk/rpks.hpp"

#include <cmath>

namespace rpk {

double MarketState::fixing(double date) const {
    auto it = fixings.find(date);
    if (it == fixings.end())
        throw MissingFixing("MarketState: no stored fixing at the requested date");
    return it->second;
}

bool MarketState::has_fixing(double date) const { return fixings.count(date) > 0; }

Vec3 MarketState::x(const WeightVectors& w) const {
    if (!(A_S > 0 && A_R > 0 && A_L > 0))
        throw Error("MarketState: factor levels must be positive");
    double x1 = std::log(A_S);
    double x2 = w.a_R != 0 ? (std::log(A_R) - w.a_R * w.b * x1) / w.a_R : 0.0;
    double x3 = std::log(A_L) - w.a_L * std::log(A_R);
    return {x1, x2, x3};
}

RpksParams::RpksParams(DiscountCurve nominal, DiscountCurve il, math::HermiteSpline bR,
                       AdditiveSpec spec)
    : nominal_(std::move(nominal)), il_(std::move(il)), bR_(std::move(bR)),
      spec_(std::move(spec)) {}

double RpksParams::cov0(double t) const {
    const auto& w = spec_.weights();
    return std::expm1(spec_.laplace_exponent(t, w.w_R() + w.w_S()));
}

double RpksParams::S(double t) const {
    double denom = R(t) * (1.0 + bR(t) * cov0(t));
    if (!(denom > 0)) throw NonPositiveCurve("RpksParams: S(t) denominator <= 0");
    return nominal_(t) / denom;
}

void RpksParams::set_libor(LiborCurve l0, math::StepFunction bl_tilde) {
    libor0_ = std::move(l0);
    bL_tilde_ = std::move(bl_tilde);
}

const LiborCurve& RpksParams::libor0() const {
    if (!libor0_) throw MissingLiborCurve("RpksParams: no LIBOR curve configured");
    return *libor0_;
}

const math::StepFunction& RpksParams::bL_tilde() const {
    if (!bL_tilde_) throw MissingLiborCurve("RpksParams: no bL steps configured");
    return *bL_tilde_;
}

math::StepFunction& RpksParams::bL_tilde() {
    if (!bL_tilde_) throw MissingLiborCurve("RpksParams: no bL steps configured");
    return *bL_tilde_;
}

double RpksParams::bL(double reset) const {
    return nominal_(reset) * libor0()(reset) + bL_tilde()(reset);
}

math::HermiteSpline flat_bR(double level) {
    std::vector<double> knots{2, 5, 7, 10, 12, 15, 20, 30};
    std::vector<double> vals(knots.size(), level);
    return math::HermiteSpline(knots, vals, math::HermiteSpline::Slopes::Clamped);
}

KernelValue kernel_values(const RpksParams& p, const MarketState& s) {
    KernelValue k;
    k.hR = p.R(s.t) * (1.0 + p.bR(s.t) * (s.A_R - 1.0));
    k.s = p.S(s.t) * s.A_S;
    k.hN = k.s * k.hR;
    if (!(k.hR > 0) || !(k.hN > 0))
        throw InvariantViolation("kernel_values: nonpositive kernel");
    return k;
}

double cpi_level(const RpksParams& p, const MarketState& s) {
    return 1.0 / (p.S(s.t) * s.A_S);
}

double nominal_bond(const RpksParams& p, const MarketState& s, double T) {
    if (T < s.t) throw OrderError("nominal_bond: T < t");
    const auto& w = p.weights();
    double cov = std::expm1(p.spec().forward_laplace(s.t, T, w.w_R() + w.w_S()));
    double num = p.R(T) * p.S(T) *
                 (1.0 + p.bR(T) * (s.A_R - 1.0) + p.bR(T) * s.A_R * cov);
    double den = p.R(s.t) * p.S(s.t) * (1.0 + p.bR(s.t) * (s.A_R - 1.0));
    return num / den;
}

double inflation_linked_bond(const RpksParams& p, const MarketState& s, double T) {
    if (T < s.t) throw OrderError("inflation_linked_bond: T < t");
    double num = p.R(T) * (1.0 + p.bR(T) * (s.A_R - 1.0));
    double den = p.R(s.t) * (1.0 + p.bR(s.t) * (s.A_R - 1.0)) * p.S(s.t) * s.A_S;
    return num / den;
}

double real_bond(const RpksParams& p, const MarketState& s, double T) {
    if (T < s.t) throw OrderError("real_bond: T < t");
    double num = p.R(T) * (1.0 + p.bR(T) * (s.A_R - 1.0));
    double den = p.R(s.t) * (1.0 + p.bR(s.t) * (s.A_R - 1.0));
    return num / den;
}

double zc_swap_price(const RpksParams& p, const MarketState& s, double T, double K) {
    return inflation_linked_bond(p, s, T) - K * nominal_bond(p, s, T);
}

double zc_fair_rate(const RpksParams& p, double T) {
    MarketState s0;
    double pn = nominal_bond(p, s0, T);
    double pil = inflation_linked_bond(p, s0, T);
    if (!(pn > 0) || !(pil > 0)) throw NonPositiveCurve("zc_fair_rate: nonpositive bond");
    return std::pow(pn / pil, 1.0 / T) - 1.0;
}

SwapletValue yoy_swaplet_price(const RpksParams& p, const MarketState& s, double T0,
                               double T1) {
    if (!(T0 < T1)) throw OrderError("yoy_swaplet_price: T0 >= T1");
    if (s.t > T1) throw OrderError("yoy_swaplet_price: swaplet already paid");
    SwapletValue v;
    v.annuity = nominal_bond(p, s, T1);
    double hN = kernel_values(p, s).hN;
    if (s.t <= T0) {
        const auto& w = p.weights();
        double cov = std::expm1(p.spec().forward_laplace(s.t, T0, w.w_R() + w.w_S()));
        v.floating = p.S(T0) * s.A_S * inflation_linked_bond(p, s, T1) +
                     p.S(T0) * p.R(T1) * p.bR(T1) * s.A_R * cov /
                         (p.R(s.t) * (1.0 + p.bR(s.t) * (s.A_R - 1.0)) * p.S(s.t));
    } else {
        // seasoned: the first fixing is in; E_t[h^N_{T1} C_{T1}] = E_t[h^R_{T1}]
        double a_fix = s.fixing(T0);
        double c_T0 = 1.0 / (p.S(T0) * a_fix);
        double e_hR = p.R(T1) * (1.0 + p.bR(T1) * (s.A_R - 1.0));
        v.floating = e_hR / (c_T0 * hN);
    }
    return v;
}

double yoy_swaplet_floating_lagged(const RpksParams& p, const MarketState& s, double T0,
                                   double T1, double T) {
    if (!(T0 < T1) || !(T1 <= T)) throw OrderError("yoy_swaplet_floating_lagged: bad dates");
    const auto& w = p.weights();
    double hN = kernel_values(p, s).hN;
    double c0 = p.R(T) * (1.0 - p.bR(T)) * p.S(T);
    double c5 = p.R(T) * p.bR(T) * p.S(T);
    double k_lag = p.spec().forward_laplace(std::max(T1, s.t), T, w.w_R() + w.w_S());
    if (s.t > T0) {
        double c_T0 = 1.0 / (p.S(T0) * s.fixing(T0));
        if (s.t >= T1) {
            double c_T1 = 1.0 / (p.S(T1) * s.fixing(T1));
            return (c_T1 / c_T0) * nominal_bond(p, s, T);
        }
        // E_t[h^N_T C_{T1}] = c0/S(T1) + c5/S(T1) A^R_t e^{kappa_{T1,T}(wR+wS)}
        return (c0 + c5 * s.A_R * std::exp(k_lag)) / (p.S(T1) * c_T0 * hN);
    }
    double sig = p.S(T0) / p.S(T1);
    double k1 = p.spec().forward_laplace(s.t, T0, w.w_R() + w.w_S());
    return sig * (c0 * s.A_S + c5 * s.A_R * s.A_S * std::exp(k1 + k_lag)) / hN;
}

double yoy_fair_rate(const RpksParams& p, const MarketState& s,
                     const std::vector<double>& schedule) {
    if (schedule.size() < 2) throw EmptySchedule("yoy_fair_rate: need >=2 dates");
    double floating = 0, annuity = 0;
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        auto v = yoy_swaplet_price(p, s, schedule[i - 1], schedule[i]);
        floating += v.floating;
        annuity += v.annuity;
    }
    return floating / annuity - 1.0;
}

double yoy_fair_rate_independent(const DiscountCurve& nominal, const DiscountCurve& il,
                                 const std::vector<double>& schedule) {
    if (schedule.size() < 2) throw EmptySchedule("yoy_fair_rate_independent: need >=2 dates");
    double floating = 0, annuity = 0;
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        double t0 = schedule[i - 1], t1 = schedule[i];
        floating += nominal(t0) * il(t1) / il(t0);
        annuity += nominal(t1);
    }
    return floating / annuity - 1.0;
}

double yoy_convexity(const RpksParams& p, const std::vector<double>& schedule) {
    MarketState s0;
    return yoy_fair_rate(p, s0, schedule) -
           yoy_fair_rate_independent(p.nominal_curve(), p.il_curve(), schedule);
}

double affine_payoff_price(const RpksParams& p, const MarketState& s, double T, double a1,
                           double a2) {
    if (T < s.t) throw OrderError("affine_payoff_price: T < t");
    const auto& w = p.weights();
    double e_hR = p.R(T) * ((1.0 - p.bR(T)) + p.bR(T) * s.A_R);
    double prod = s.A_R * s.A_S *
                  std::exp(p.spec().forward_laplace(s.t, T, w.w_R() + w.w_S()));
    double e_hN = p.R(T) * p.S(T) * ((1.0 - p.bR(T)) * s.A_S + p.bR(T) * prod);
    double hN = kernel_values(p, s).hN;
    return (a1 * e_hN + a2 * e_hR) / hN;
}

DiscountCurve fit_R(const DiscountCurve& il_market) { return il_market; }

DiscountCurve fit_S(const RpksParams& p, const std::vector<double>& grid) {
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = p.S(grid[i]);
    return DiscountCurve(grid, vals);
}

}  // namespace rpk
