#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace rpk::math {

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration.
template <int N>
struct GaussLegendre {
    std::array<double, N> x{}, w{};
    GaussLegendre() {
        const int m = (N + 1) / 2;
        for (int i = 0; i < m; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = 0;
                for (int j = 0; j < N; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
                }
                pp = N * (z * p0 - p1) / (z * z - 1);
                double z1 = z;
                z = z1 - p0 / pp;
                if (std::fabs(z - z1) < 1e-15) break;
            }
            x[i] = -z;
            x[N - 1 - i] = z;
            w[i] = 2 / ((1 - z * z) * pp * pp);
            w[N - 1 - i] = w[i];
        }
    }
};

inline const GaussLegendre<32>& gl32() {
    static const GaussLegendre<32> g;
    return g;
}

template <class F>
double gl32_integrate(F&& f, double a, double b) {
    const auto& g = gl32();
    const double c = 0.5 * (b - a), m = 0.5 * (a + b);
    double s = 0;
    for (int i = 0; i < 32; ++i) s += g.w[i] * f(m + c * g.x[i]);
    return c * s;
}

// Gauss-Hermite nodes/weights for \int f(x) e^{-x^2} dx, by Newton iteration.
inline void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    const int m = (n + 1) / 2;
    double z = 0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow((double)n, 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];
        double pp = 0;
        for (int it = 0; it < 200; ++it) {
            double p1 = pim4, p2 = 0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt((double)j / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-14) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace rpk::math
