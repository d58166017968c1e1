#pragma once

#include <complex>

#include "rpk/errors.hpp"

namespace rpk {

// Normal Inverse Gaussian marginal in the (nu, theta, sigma) parametrisation.
// Laplace exponent per unit time:
//   kappa(z) = -nu (sqrt(nu^2 - 2 z theta - z^2 sigma^2) - nu)
// Exponential moments exist for z in [(-theta - s)/sigma^2, (-theta + s)/sigma^2]
// with s = sqrt(theta^2 + sigma^2 nu^2).
struct NigParams {
    double nu = 1.0;
    double theta = 0.0;
    double sigma = 1.0;

    // sigma chosen so the unit-time variance kappa''(0) = sigma^2 + theta^2/nu^2 is 1
    static NigParams unit_variance(double nu, double theta);

    double radicand(double z) const { return nu * nu - 2 * z * theta - z * z * sigma * sigma; }
    bool in_domain(double z) const { return radicand(z) >= 0; }
    double domain_lo() const;
    double domain_hi() const;
};

double nig_laplace(double nu, double theta, double sigma, double z);
std::complex<double> nig_laplace(double nu, double theta, double sigma,
                                 std::complex<double> z);

inline double nig_laplace(const NigParams& p, double z) {
    return nig_laplace(p.nu, p.theta, p.sigma, z);
}
inline std::complex<double> nig_laplace(const NigParams& p, std::complex<double> z) {
    return nig_laplace(p.nu, p.theta, p.sigma, z);
}

}  // namespace rpk
