#include "rpk/nig.hpp"

#include <cmath>

namespace rpk {

NigParams NigParams::unit_variance(double nu, double theta) {
    if (!(nu > 0)) throw Error("NigParams: nu must be positive");
    if (!(std::fabs(theta) < nu)) throw Error("NigParams: |theta| < nu required for unit variance");
    return {nu, theta, std::sqrt(1.0 - theta * theta / (nu * nu))};
}

double NigParams::domain_lo() const {
    double s = std::sqrt(theta * theta + sigma * sigma * nu * nu);
    return (-theta - s) / (sigma * sigma);
}

double NigParams::domain_hi() const {
    double s = std::sqrt(theta * theta + sigma * sigma * nu * nu);
    return (-theta + s) / (sigma * sigma);
}

double nig_laplace(double nu, double theta, double sigma, double z) {
    if (!(nu > 0) || !(sigma > 0)) throw Error("nig_laplace: nu, sigma must be positive");
    double rad = nu * nu - 2 * z * theta - z * z * sigma * sigma;
    if (rad < 0) throw DomainError("nig_laplace: z outside the exponential-moment domain");
    return -nu * (std::sqrt(rad) - nu);
}

// Complex argument: Re(z) must sit strictly inside the moment domain; there the
// radicand has positive real part and the principal square root is continuous.
std::complex<double> nig_laplace(double nu, double theta, double sigma,
                                 std::complex<double> z) {
    if (!(nu > 0) || !(sigma > 0)) throw Error("nig_laplace: nu, sigma must be positive");
    double x = z.real();
    if (nu * nu - 2 * x * theta - x * x * sigma * sigma < 0)
        throw DomainError("nig_laplace: Re(z) outside the exponential-moment domain");
    std::complex<double> rad = nu * nu - 2.0 * z * theta - z * z * sigma * sigma;
    return -nu * (std::sqrt(rad) - nu);
}

}  // namespace rpk
