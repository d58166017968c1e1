#pragma once

#include <cmath>
#include <complex>

namespace rpk::math {

// Complex log-gamma, Lanczos approximation (g=7, 9 coefficients).
// Relative error below 1e-13 on Re(z) > 0; reflection handles the left half plane.
inline std::complex<double> log_gamma(std::complex<double> z) {
    static const double g = 7;
    static const double c[9] = {0.99999999999980993,  676.5203681218851,
                                -1259.1392167224028,  771.32342877765313,
                                -176.61502916214059,  12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
    std::complex<double> t = z + g + 0.5;
    return 0.5 * std::log(2 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline std::complex<double> gamma(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace rpk::math
