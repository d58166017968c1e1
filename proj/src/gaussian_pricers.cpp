#include "rpk/gaussian_pricers.hpp"

#include <cmath>

#include "rpk/math/normal.hpp"

namespace rpk {

namespace {

using math::norm_cdf;

void require_gaussian(const RpksParams& p, const char* who) {
    if (p.spec().kind() != DriverKind::GaussianTC)
        throw WrongSpecKind(std::string(who) + ": GaussianTC spec required");
}

// quadratic form <w, Sigma_{[t0,t1]} v> of the two stochastic coordinates
double quad_form(const RpksParams& p, double t0, double t1, const Vec3& w, const Vec3& v) {
    double d_tau = p.spec().tau(t1) - p.spec().tau(t0);
    double d_t = t1 - t0;
    return w[0] * v[0] * d_tau + w[1] * v[1] * d_t;
}

Vec3 drift_incr(const RpksParams& p, double t0, double t1) {
    Vec3 a = p.spec().drift(t1), b = p.spec().drift(t0);
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

void BivariateNormalMoments::validate() const {
    if (var_x < 0 || var_y < 0)
        throw Error("BivariateNormalMoments: negative variance");
    if (cov_xy * cov_xy > var_x * var_y * (1 + 1e-12))
        throw Error("BivariateNormalMoments: |cov| exceeds sqrt(var_x var_y)");
}

double bn_call_kernel(const BivariateNormalMoments& m, double alpha, double beta) {
    m.validate();
    if (!(alpha > 0) || !(beta > 0)) throw Error("bn_call_kernel: alpha, beta > 0 required");
    if (m.var_y < 1e-24) {
        // Y degenerate at mu_y
        return std::exp(m.mu_x + 0.5 * m.var_x) *
               std::max(0.0, alpha * std::exp(m.mu_y) - beta);
    }
    double sy = std::sqrt(m.var_y);
    double b = m.cov_xy / m.var_y;
    double a = m.mu_x - b * m.mu_y - 0.5 * (m.var_x - m.cov_xy * m.cov_xy / m.var_y);
    double delta = a + b * m.mu_y + 0.5 * b * b * m.var_y;
    double d = (std::log(alpha / beta) + b * m.var_y + m.mu_y) / sy;
    return alpha * std::exp(delta + m.mu_y + 0.5 * m.var_y) * norm_cdf(d + sy) -
           beta * std::exp(delta) * norm_cdf(d);
}

double bn_put_kernel(const BivariateNormalMoments& m, double alpha, double beta) {
    m.validate();
    if (!(alpha > 0) || !(beta > 0)) throw Error("bn_put_kernel: alpha, beta > 0 required");
    if (m.var_y < 1e-24) {
        return std::exp(m.mu_x + 0.5 * m.var_x) *
               std::max(0.0, beta - alpha * std::exp(m.mu_y));
    }
    double sy = std::sqrt(m.var_y);
    double b = m.cov_xy / m.var_y;
    double a = m.mu_x - b * m.mu_y - 0.5 * (m.var_x - m.cov_xy * m.cov_xy / m.var_y);
    double delta = a + b * m.mu_y + 0.5 * b * b * m.var_y;
    double d = (std::log(alpha / beta) + b * m.var_y + m.mu_y) / sy;
    return beta * std::exp(delta) * norm_cdf(-d) -
           alpha * std::exp(delta + m.mu_y + 0.5 * m.var_y) * norm_cdf(-(d + sy));
}

namespace {

// Moment blocks for the YoY floorlet/caplet over the period [T0, T1]:
// outer factor X_j, option variable Y = -<w_S, X_{T1} - X_{T0}>.
struct YoYBlocks {
    BivariateNormalMoments m1, m2;
    double alpha, c0, c6, hN, a_s, a_r;
};

YoYBlocks yoy_blocks(const RpksParams& p, const MarketState& s, const YoYOptionSpec& o) {
    const auto& w = p.weights();
    const Vec3 ws = w.w_S(), wsr = w.w_R() + w.w_S();
    Vec3 mu = drift_incr(p, o.T0, o.T1);

    YoYBlocks b;
    b.m1.mu_x = dot(ws, mu);
    b.m1.var_x = quad_form(p, o.T0, o.T1, ws, ws);
    b.m1.mu_y = -b.m1.mu_x;
    b.m1.var_y = b.m1.var_x;
    b.m1.cov_xy = -b.m1.var_x;

    b.m2.mu_x = dot(wsr, mu);
    b.m2.var_x = quad_form(p, o.T0, o.T1, wsr, wsr);
    b.m2.mu_y = b.m1.mu_y;
    b.m2.var_y = b.m1.var_y;
    b.m2.cov_xy = -quad_form(p, o.T0, o.T1, ws, wsr);

    b.alpha = p.S(o.T0) / (o.K * p.S(o.T1));
    b.c0 = p.R(o.T) * (1.0 - p.bR(o.T)) * p.S(o.T);
    b.c6 = p.R(o.T) * p.bR(o.T) * p.S(o.T) *
           std::exp(p.spec().forward_laplace(s.t, o.T0, wsr) +
                    p.spec().forward_laplace(o.T1, o.T, wsr));
    b.hN = kernel_values(p, s).hN;
    b.a_s = s.A_S;
    b.a_r = s.A_R;
    return b;
}

}  // namespace

double yoy_floorlet_gaussian(const RpksParams& p, const MarketState& s,
                             const YoYOptionSpec& o) {
    require_gaussian(p, "yoy_floorlet_gaussian");
    o.validate();
    if (s.t > o.T0) throw OrderError("yoy_floorlet_gaussian: t > T0 (use the Fourier pricer)");
    auto b = yoy_blocks(p, s, o);
    double term1 = bn_put_kernel(b.m1, b.alpha, 1.0);
    double term2 = bn_put_kernel(b.m2, b.alpha, 1.0);
    return o.K * (b.c0 * b.a_s * term1 + b.c6 * b.a_r * b.a_s * term2) / b.hN;
}

double yoy_caplet_gaussian(const RpksParams& p, const MarketState& s,
                           const YoYOptionSpec& o) {
    require_gaussian(p, "yoy_caplet_gaussian");
    o.validate();
    if (s.t > o.T0) throw OrderError("yoy_caplet_gaussian: t > T0 (use the Fourier pricer)");
    auto b = yoy_blocks(p, s, o);
    double term1 = bn_call_kernel(b.m1, b.alpha, 1.0);
    double term2 = bn_call_kernel(b.m2, b.alpha, 1.0);
    return o.K * (b.c0 * b.a_s * term1 + b.c6 * b.a_r * b.a_s * term2) / b.hN;
}

namespace {

struct ZcBlocks {
    BivariateNormalMoments m1, m2;
    double alpha_t, c0, c7, hN, a_r, inv_cb, s_ti;
};

ZcBlocks zc_blocks(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o) {
    const auto& w = p.weights();
    const Vec3 ws = w.w_S(), wr = w.w_R(), wsr = w.w_R() + w.w_S();
    Vec3 mu = drift_incr(p, s.t, o.Ti);

    ZcBlocks b;
    // first term: no outer exponential
    b.m1.mu_y = dot(ws, mu);
    b.m1.var_y = quad_form(p, s.t, o.Ti, ws, ws);

    b.m2.mu_x = dot(wr, mu);
    b.m2.var_x = quad_form(p, s.t, o.Ti, wr, wr);
    b.m2.mu_y = b.m1.mu_y;
    b.m2.var_y = b.m1.var_y;
    b.m2.cov_xy = quad_form(p, s.t, o.Ti, wr, ws);

    double c_base = 1.0;
    if (o.Tbase > 0) c_base = 1.0 / (p.S(o.Tbase) * s.fixing(o.Tbase));
    b.inv_cb = 1.0 / c_base;
    b.alpha_t = o.K * c_base * p.S(o.Ti) * s.A_S;
    b.c0 = p.R(o.T) * (1.0 - p.bR(o.T)) * p.S(o.T);
    b.c7 = p.R(o.T) * p.bR(o.T) * p.S(o.T) *
           std::exp(p.spec().forward_laplace(o.Ti, o.T, wsr));
    b.hN = kernel_values(p, s).hN;
    b.a_r = s.A_R;
    b.s_ti = p.S(o.Ti);
    return b;
}

}  // namespace

double zc_floor_gaussian(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o) {
    require_gaussian(p, "zc_floor_gaussian");
    o.validate();
    if (s.t > o.Ti) throw OrderError("zc_floor_gaussian: t > Ti");
    auto b = zc_blocks(p, s, o);
    double term1 = bn_call_kernel(b.m1, b.alpha_t, 1.0);
    double term2 = bn_call_kernel(b.m2, b.alpha_t, 1.0);
    return b.inv_cb * (b.c0 * term1 + b.c7 * b.a_r * term2) / (b.s_ti * b.hN);
}

double zc_cap_gaussian(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o) {
    require_gaussian(p, "zc_cap_gaussian");
    o.validate();
    if (s.t > o.Ti) throw OrderError("zc_cap_gaussian: t > Ti");
    auto b = zc_blocks(p, s, o);
    double term1 = bn_put_kernel(b.m1, b.alpha_t, 1.0);
    double term2 = bn_put_kernel(b.m2, b.alpha_t, 1.0);
    return b.inv_cb * (b.c0 * term1 + b.c7 * b.a_r * term2) / (b.s_ti * b.hN);
}

double lpi_bond_gaussian(const RpksParams& p, const MarketState& s, const LpiSpec& l) {
    require_gaussian(p, "lpi_bond_gaussian");
    l.validate();
    const auto& sched = l.schedule;
    if (s.t < sched.front() || s.t >= sched[1])
        throw OrderError("lpi_bond_gaussian: valuation date must lie in the first period");
    const auto& w = p.weights();
    const Vec3 ws = w.w_S(), wsr = w.w_R() + w.w_S();
    const double beta_c = 1.0 + l.K_c, beta_f = 1.0 + l.K_f;

    double prod1 = 1.0, prod2 = 1.0;
    for (std::size_t k = 1; k < sched.size(); ++k) {
        double t0 = std::max(sched[k - 1], s.t), t1 = sched[k];
        Vec3 mu = drift_incr(p, t0, t1);
        double v_ss = quad_form(p, t0, t1, ws, ws);

        double s_ratio;  // realized part of C_{T_k}/C_{T_{k-1}} at the period start
        if (k == 1) {
            double a_s0 = sched.front() == 0 ? 1.0
                        : (sched.front() == s.t ? s.A_S : s.fixing(sched.front()));
            s_ratio = (p.S(sched.front()) * a_s0) / (p.S(t1) * s.A_S);
        } else {
            s_ratio = p.S(sched[k - 1]) / p.S(t1);
        }

        for (int j = 1; j <= 2; ++j) {
            const Vec3& v = j == 1 ? ws : wsr;
            BivariateNormalMoments m;
            m.mu_x = dot(v, mu);
            m.var_x = quad_form(p, t0, t1, v, v);
            m.mu_y = -dot(ws, mu);
            m.var_y = v_ss;
            m.cov_xy = -quad_form(p, t0, t1, v, ws);
            double lead = std::exp(p.spec().forward_laplace(t0, t1, v));
            double factor = beta_c * lead -
                            beta_c * bn_put_kernel(m, s_ratio / beta_c, 1.0) +
                            beta_f * bn_put_kernel(m, s_ratio / beta_f, 1.0);
            (j == 1 ? prod1 : prod2) *= factor;
        }
    }
    double TN = sched.back();
    double c0 = p.R(l.T) * (1.0 - p.bR(l.T)) * p.S(l.T);
    double c5 = p.R(l.T) * p.bR(l.T) * p.S(l.T) *
                std::exp(p.spec().forward_laplace(TN, l.T, wsr));
    double hN = kernel_values(p, s).hN;
    return l.base_level * (c0 * s.A_S * prod1 + c5 * s.A_R * s.A_S * prod2) / hN;
}

}  // namespace rpk
