#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "rpk/errors.hpp"

namespace rpk::math {

// Brent root finder on a bracketing interval [a,b].
template <class F>
double brent(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if (fa * fb > 0) throw NoRoot("brent: interval does not bracket a root");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * xtol;
        double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2 * xm * s;
                q = 1 - s;
            } else {
                double r = fb / fc;
                q = fa / fc;
                p = s * (2 * xm * q * (q - r) - (b - a) * (r - 1));
                q = (q - 1) * (r - 1) * (s - 1);
            }
            if (p > 0) q = -q;
            p = std::fabs(p);
            if (2 * p < std::min(3 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0) == (fc > 0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    return b;
}

// Expands [lo,hi] geometrically around a seed until f changes sign, then runs brent.
// lo_bound/hi_bound clip the search; throws NoRoot when the search range is exhausted.
template <class F>
double brent_auto_bracket(F&& f, double seed, double lo_bound, double hi_bound,
                          double xtol = 1e-12) {
    double lo = seed, hi = seed;
    double flo = f(lo), fhi = flo;
    double step = std::max(1e-4 * std::max(std::fabs(seed), 1e-8), 1e-10);
    for (int k = 0; k < 200; ++k) {
        if (flo * fhi < 0) return brent(f, lo, hi, xtol);
        bool moved = false;
        if (lo > lo_bound) {
            lo = std::max(lo_bound, lo - step);
            flo = f(lo);
            moved = true;
        }
        if (flo * fhi < 0) return brent(f, lo, hi, xtol);
        if (hi < hi_bound) {
            hi = std::min(hi_bound, hi + step);
            fhi = f(hi);
            moved = true;
        }
        step *= 2;
        if (!moved) break;
    }
    throw NoRoot("brent_auto_bracket: no sign change in search range");
}

}  // namespace rpk::math
