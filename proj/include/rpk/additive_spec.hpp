#pragma once

#include <array>
#include <complex>
#include <vector>

#include "rpk/errors.hpp"
#include "rpk/nig.hpp"
#include "rpk/time_change.hpp"

namespace rpk {

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<std::complex<double>, 3>;
using Complex = std::complex<double>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Complex dot(const CVec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline CVec3 to_cvec(const Vec3& a) { return {a[0], a[1], a[2]}; }

// Exposure weights of the three exponential factors:
//   w_S = (1,0,0),  w_R = (a_R b, a_R, 0),  w_L = a_L w_R + (0,0,1)
struct WeightVectors {
    double b = 30.0;
    double a_R = 0.25;
    double a_L = 1.3;

    Vec3 w_S() const { return {1.0, 0.0, 0.0}; }
    Vec3 w_R() const { return {a_R * b, a_R, 0.0}; }
    Vec3 w_L() const { return {a_L * a_R * b, a_L * a_R, 1.0}; }
};

enum class DriverKind { GaussianTC, NigTC };

// One pricing term of a multiperiod moment generating function:
// contributes u * <w, X_T> to the exponent.
struct MgfTerm {
    double T;
    Complex u;
    Vec3 w;
};

// The three-coordinate additive driver
//   X_t = ( L^S_{tau(t)} + m_1(t),  L^R_t + m_2(t),  m_3(t) )
// with independent unit-variance Levy marginals L^S, L^R (Wiener or NIG) and
// deterministic drifts m(t) chosen so that exp<w_i, X_t> has expectation one
// for each of the three weight vectors.
class AdditiveSpec {
public:
    AdditiveSpec(DriverKind kind, NigParams s_marginal, NigParams r_marginal,
                 TimeChange tc, WeightVectors weights);

    static AdditiveSpec gaussian(TimeChange tc, WeightVectors weights = {});
    static AdditiveSpec nig(NigParams s_marginal, NigParams r_marginal, TimeChange tc,
                            WeightVectors weights = {});
    // nu_S = nu_R, theta_S = theta_R, unit-variance sigma
    static AdditiveSpec nig_shared(double nu, double theta, TimeChange tc,
                                   WeightVectors weights = {});

    DriverKind kind() const { return kind_; }
    const WeightVectors& weights() const { return weights_; }
    const TimeChange& time_change() const { return tc_; }
    const NigParams& s_marginal() const { return s_; }
    const NigParams& r_marginal() const { return r_; }

    double tau(double t) const { return tc_(t); }

    // unit-time Laplace exponents of the random marginals
    double kappa_s(double z) const;
    double kappa_r(double z) const;
    Complex kappa_s(Complex z) const;
    Complex kappa_r(Complex z) const;

    // martingalizing drift m(t); linear in (tau(t), t)
    Vec3 drift(double t) const;
    const Vec3& drift_per_tau() const { return drift_tau_; }
    const Vec3& drift_per_t() const { return drift_t_; }

    // kappa_t(z) = log E exp<z, X_t>;  kappa_t(w_i) = 0 by construction
    double laplace_exponent(double t, const Vec3& z) const;
    Complex laplace_exponent(double t, const CVec3& z) const;
    double forward_laplace(double t, double T, const Vec3& z) const;
    Complex forward_laplace(double t, double T, const CVec3& z) const;

    // Cov_t[ exp<w1, X_T - X_t>, exp<w2, X_T - X_t> ]
    double cov_factor(double t, double T, const Vec3& w1, const Vec3& w2) const;

    // E_t exp( sum_i u_i <w_i, X_{T_i}> ) given the state X_t = x; times must be
    // sorted and >= t
    Complex multiperiod_mgf(double t, const Vec3& x, const std::vector<MgfTerm>& terms) const;

    bool in_domain(const Vec3& z) const;
    void require_domain(const Vec3& z) const;

private:
    DriverKind kind_;
    NigParams s_, r_;
    TimeChange tc_;
    WeightVectors weights_;
    Vec3 drift_tau_{}, drift_t_{};  // m(t) = drift_tau_ * tau(t) + drift_t_ * t

    void solve_drifts();
    double g_s(const Vec3& z) const;  // <z, drift_tau_> + kappa_s(z1)
    double g_r(const Vec3& z) const;  // <z, drift_t_>   + kappa_r(z2)
    Complex g_s(const CVec3& z) const;
    Complex g_r(const CVec3& z) const;
};

}  // namespace rpk
