#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "rpk/errors.hpp"

namespace rpk::math {

struct LevMarOptions {
    double ftol = 1e-10;     // relative decrease of the objective
    double xtol = 1e-10;     // relative step size
    int max_iter = 200;
    double fd_step = 1e-6;   // relative finite-difference step for the Jacobian
};

struct LevMarResult {
    std::vector<double> x;
    double objective = 0;    // 0.5 * sum r_i^2
    int iterations = 0;
    bool converged = false;
};

// Levenberg-Marquardt with finite-difference Jacobian. Residual evaluations
// that throw are treated as a large constant penalty, which keeps the search
// inside the feasible region.
inline LevMarResult levmar(
    const std::function<std::vector<double>(const std::vector<double>&)>& residuals,
    std::vector<double> x0, const LevMarOptions& opt = {}) {
    const double penalty = 1e6;
    auto safe_res = [&](const std::vector<double>& x) -> std::vector<double> {
        try {
            return residuals(x);
        } catch (const std::exception&) {
            return {};
        }
    };
    auto obj_of = [](const std::vector<double>& r) {
        double s = 0;
        for (double v : r) s += v * v;
        return 0.5 * s;
    };

    const size_t n = x0.size();
    std::vector<double> r = safe_res(x0);
    if (r.empty()) throw SolverFail("levmar: infeasible starting point");
    const size_t m = r.size();
    double obj = obj_of(r);
    double lambda = 1e-3;

    LevMarResult out;
    out.x = x0;
    out.objective = obj;

    std::vector<double> jac(m * n);
    for (int iter = 0; iter < opt.max_iter; ++iter) {
        out.iterations = iter + 1;
        // finite-difference Jacobian
        for (size_t j = 0; j < n; ++j) {
            double h = opt.fd_step * std::max(std::fabs(x0[j]), 1e-4);
            std::vector<double> xp = x0;
            xp[j] += h;
            std::vector<double> rp = safe_res(xp);
            if (rp.empty()) {
                xp[j] = x0[j] - h;
                rp = safe_res(xp);
                h = -h;
            }
            for (size_t i = 0; i < m; ++i)
                jac[i * n + j] = rp.empty() ? penalty : (rp[i] - r[i]) / h;
        }
        // normal equations J'J + lambda diag(J'J)
        std::vector<double> jtj(n * n, 0.0), jtr(n, 0.0);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j) {
                jtr[j] += jac[i * n + j] * r[i];
                for (size_t k = j; k < n; ++k) jtj[j * n + k] += jac[i * n + j] * jac[i * n + k];
            }
        }
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < j; ++k) jtj[j * n + k] = jtj[k * n + j];

        bool stepped = false;
        for (int trial = 0; trial < 30 && !stepped; ++trial) {
            std::vector<double> a = jtj;
            for (size_t j = 0; j < n; ++j) a[j * n + j] *= (1 + lambda);
            // Cholesky solve a * dx = jtr
            std::vector<double> L(n * n, 0.0);
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) {
                for (size_t j = 0; j <= i; ++j) {
                    double s = a[i * n + j];
                    for (size_t k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
                    if (i == j) {
                        if (s <= 0) { ok = false; break; }
                        L[i * n + i] = std::sqrt(s);
                    } else {
                        L[i * n + j] = s / L[j * n + j];
                    }
                }
            }
            if (!ok) {
                lambda *= 10;
                continue;
            }
            std::vector<double> y(n), dx(n);
            for (size_t i = 0; i < n; ++i) {
                double s = jtr[i];
                for (size_t k = 0; k < i; ++k) s -= L[i * n + k] * y[k];
                y[i] = s / L[i * n + i];
            }
            for (size_t i = n; i-- > 0;) {
                double s = y[i];
                for (size_t k = i + 1; k < n; ++k) s -= L[k * n + i] * dx[k];
                dx[i] = s / L[i * n + i];
            }
            std::vector<double> xnew(n);
            double step_norm = 0, x_norm = 0;
            for (size_t j = 0; j < n; ++j) {
                xnew[j] = x0[j] - dx[j];
                step_norm += dx[j] * dx[j];
                x_norm += x0[j] * x0[j];
            }
            std::vector<double> rnew = safe_res(xnew);
            double objnew = rnew.empty() ? 2 * obj + penalty : obj_of(rnew);
            if (objnew < obj) {
                double rel_dec = (obj - objnew) / std::max(obj, 1e-300);
                x0 = xnew;
                r = rnew;
                obj = objnew;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                out.x = x0;
                out.objective = obj;
                if (rel_dec < opt.ftol || std::sqrt(step_norm) < opt.xtol * (std::sqrt(x_norm) + opt.xtol)) {
                    out.converged = true;
                    return out;
                }
            } else {
                lambda *= 10;
            }
        }
        if (!stepped) {
            out.converged = true;  // stuck at a (local) minimum
            return out;
        }
        if (obj < 1e-300) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

}  // namespace rpk::math
