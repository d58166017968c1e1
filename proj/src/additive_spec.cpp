#include "rpk/additive_spec.hpp"

#include <cmath>

namespace rpk {

AdditiveSpec::AdditiveSpec(DriverKind kind, NigParams s_marginal, NigParams r_marginal,
                           TimeChange tc, WeightVectors weights)
    : kind_(kind), s_(s_marginal), r_(r_marginal), tc_(std::move(tc)), weights_(weights) {
    const Vec3 ws = weights_.w_S(), wr = weights_.w_R(), wl = weights_.w_L();
    require_domain(ws);
    require_domain(wr);
    require_domain(wl);
    require_domain(ws + wr);  // needed by every covariance-bearing price
    solve_drifts();
}

AdditiveSpec AdditiveSpec::gaussian(TimeChange tc, WeightVectors weights) {
    return AdditiveSpec(DriverKind::GaussianTC, {}, {}, std::move(tc), weights);
}

AdditiveSpec AdditiveSpec::nig(NigParams s_marginal, NigParams r_marginal, TimeChange tc,
                               WeightVectors weights) {
    return AdditiveSpec(DriverKind::NigTC, s_marginal, r_marginal, std::move(tc), weights);
}

AdditiveSpec AdditiveSpec::nig_shared(double nu, double theta, TimeChange tc,
                                      WeightVectors weights) {
    NigParams p = NigParams::unit_variance(nu, theta);
    return nig(p, p, std::move(tc), weights);
}

double AdditiveSpec::kappa_s(double z) const {
    return kind_ == DriverKind::GaussianTC ? 0.5 * z * z : nig_laplace(s_, z);
}

double AdditiveSpec::kappa_r(double z) const {
    return kind_ == DriverKind::GaussianTC ? 0.5 * z * z : nig_laplace(r_, z);
}

Complex AdditiveSpec::kappa_s(Complex z) const {
    return kind_ == DriverKind::GaussianTC ? 0.5 * z * z : nig_laplace(s_, z);
}

Complex AdditiveSpec::kappa_r(Complex z) const {
    return kind_ == DriverKind::GaussianTC ? 0.5 * z * z : nig_laplace(r_, z);
}

bool AdditiveSpec::in_domain(const Vec3& z) const {
    if (kind_ == DriverKind::GaussianTC) return true;
    return s_.in_domain(z[0]) && r_.in_domain(z[1]);
}

void AdditiveSpec::require_domain(const Vec3& z) const {
    if (!in_domain(z)) throw DomainError("AdditiveSpec: argument outside moment domain");
}

// E exp<w, X_t> = exp( <w, m(t)> + tau(t) kappa_s(w1) + t kappa_r(w2) ) = 1
// for w in {w_S, w_R, w_L}. tau(t) and t are independent functions, so the
// tau- and t-coefficients of m solve two triangular 3x3 systems.
void AdditiveSpec::solve_drifts() {
    const Vec3 ws = weights_.w_S(), wr = weights_.w_R(), wl = weights_.w_L();
    auto solve = [&](double ks_s, double ks_r, double ks_l) {
        Vec3 m{};
        m[0] = -ks_s / ws[0];  // ws = (1,0,0)
        if (wr[1] != 0.0)
            m[1] = (-ks_r - wr[0] * m[0]) / wr[1];
        else if (std::fabs(ks_r + wr[0] * m[0]) > 1e-14)
            throw Error("AdditiveSpec: degenerate w_R incompatible with martingale drift");
        m[2] = (-ks_l - wl[0] * m[0] - wl[1] * m[1]) / wl[2];
        return m;
    };
    drift_tau_ = solve(kappa_s(ws[0]), kappa_s(wr[0]), kappa_s(wl[0]));
    drift_t_ = solve(kappa_r(ws[1]), kappa_r(wr[1]), kappa_r(wl[1]));
}

Vec3 AdditiveSpec::drift(double t) const {
    double s = tau(t);
    return {drift_tau_[0] * s + drift_t_[0] * t, drift_tau_[1] * s + drift_t_[1] * t,
            drift_tau_[2] * s + drift_t_[2] * t};
}

double AdditiveSpec::g_s(const Vec3& z) const { return dot(z, drift_tau_) + kappa_s(z[0]); }
double AdditiveSpec::g_r(const Vec3& z) const { return dot(z, drift_t_) + kappa_r(z[1]); }

Complex AdditiveSpec::g_s(const CVec3& z) const {
    return z[0] * drift_tau_[0] + z[1] * drift_tau_[1] + z[2] * drift_tau_[2] + kappa_s(z[0]);
}

Complex AdditiveSpec::g_r(const CVec3& z) const {
    return z[0] * drift_t_[0] + z[1] * drift_t_[1] + z[2] * drift_t_[2] + kappa_r(z[1]);
}

double AdditiveSpec::laplace_exponent(double t, const Vec3& z) const {
    if (t < 0) throw NegativeTime("laplace_exponent: t < 0");
    return tau(t) * g_s(z) + t * g_r(z);
}

Complex AdditiveSpec::laplace_exponent(double t, const CVec3& z) const {
    if (t < 0) throw NegativeTime("laplace_exponent: t < 0");
    return tau(t) * g_s(z) + t * g_r(z);
}

double AdditiveSpec::forward_laplace(double t, double T, const Vec3& z) const {
    if (t < 0) throw NegativeTime("forward_laplace: t < 0");
    if (t > T) throw OrderError("forward_laplace: t > T");
    return (tau(T) - tau(t)) * g_s(z) + (T - t) * g_r(z);
}

Complex AdditiveSpec::forward_laplace(double t, double T, const CVec3& z) const {
    if (t < 0) throw NegativeTime("forward_laplace: t < 0");
    if (t > T) throw OrderError("forward_laplace: t > T");
    return (tau(T) - tau(t)) * g_s(z) + (T - t) * g_r(z);
}

double AdditiveSpec::cov_factor(double t, double T, const Vec3& w1, const Vec3& w2) const {
    require_domain(w1);
    require_domain(w2);
    require_domain(w1 + w2);
    double k1 = forward_laplace(t, T, w1);
    double k2 = forward_laplace(t, T, w2);
    double k12 = forward_laplace(t, T, w1 + w2);
    return std::exp(k1 + k2) * std::expm1(k12 - k1 - k2);
}

Complex AdditiveSpec::multiperiod_mgf(double t, const Vec3& x,
                                      const std::vector<MgfTerm>& terms) const {
    if (terms.empty()) return 1.0;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i].T > terms[i + 1].T) throw OrderError("multiperiod_mgf: unsorted times");
    if (terms.front().T < t) throw OrderError("multiperiod_mgf: time before valuation date");

    // cumulative weights from the back: z_i = sum_{j>=i} u_j w_j
    const std::size_t n = terms.size();
    std::vector<CVec3> z(n);
    CVec3 acc{0.0, 0.0, 0.0};
    for (std::size_t i = n; i-- > 0;) {
        for (int k = 0; k < 3; ++k) acc[k] += terms[i].u * terms[i].w[k];
        z[i] = acc;
    }
    for (const auto& zi : z) {
        Vec3 re{zi[0].real(), zi[1].real(), zi[2].real()};
        require_domain(re);
    }
    Complex expo = dot(z[0], x);
    double prev = t;
    for (std::size_t i = 0; i < n; ++i) {
        expo += forward_laplace(prev, terms[i].T, z[i]);
        prev = terms[i].T;
    }
    return std::exp(expo);
}

}  // namespace rpk
