#include "rpk/fourier.hpp"

#include <cmath>

#include "rpk/math/complex_gamma.hpp"
#include "rpk/math/quadrature.hpp"

namespace rpk::fourier {

namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

bool feasible(const std::function<Complex(Complex)>& f, double damping) {
    try {
        return finite(f(Complex(damping, 0.0)));
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace

double resolve_damping(const std::function<Complex(Complex)>& f, double start, double lo,
                       double hi) {
    if (start > lo && start < hi && feasible(f, start)) return start;
    // step toward the lower boundary, then bisect against it
    double step = start > 0 ? -0.25 : 0.25;
    double r = start + step;
    while (r > lo + 1e-9 && r < hi - 1e-9) {
        if (feasible(f, r)) return r;
        r += step;
    }
    double edge = step < 0 ? lo : hi;
    for (double frac : {0.5, 0.25, 0.125, 0.0625}) {
        double cand = edge + (start - edge) * frac;
        if (cand > lo && cand < hi && feasible(f, cand)) return cand;
    }
    throw DampingInfeasible("resolve_damping: no feasible damping parameter found");
}

double damped_ratio_integral(const std::function<Complex(Complex)>& f, double damping,
                             const QuadratureConfig& cfg, QuadDiagnostics* diag) {
    const double R = damping;
    auto integrand = [&](double u) {
        Complex z(R, u);
        return (f(z) / (z * (1.0 + z))).real();
    };
    double total = 0, lo = 0, width = cfg.first_panel;
    int panels = 0;
    double last = 1e300, second_last = 1e300;
    double tail_bound = 0;
    bool converged = false;
    while (lo < cfg.max_truncation) {
        double hi = std::min(lo + width, cfg.max_truncation);
        double part = math::gl32_integrate(integrand, lo, hi);
        total += part;
        ++panels;
        second_last = last;
        last = std::fabs(part);
        double u_probe = hi;
        tail_bound = std::fabs(integrand(u_probe)) * u_probe * u_probe;
        double tol = std::max(cfg.abs_tol * 0.1, cfg.rel_tol * std::fabs(total) * 0.1);
        if (panels >= 2 && last < tol && second_last < tol) {
            converged = true;
            break;
        }
        lo = hi;
        width *= cfg.panel_growth;
    }
    if (diag) {
        diag->damping_used = R;
        diag->truncation = lo;
        diag->panels = panels;
        diag->tail_bound = tail_bound;
        diag->converged = converged;
    }
    if (!converged)
        throw QuadratureNoConvergence("damped_ratio_integral: tolerance unmet at max truncation");
    return total / M_PI;
}

double price_floor_kernel(const Mgf3& q, double damping, const QuadratureConfig& cfg,
                          QuadDiagnostics* diag) {
    auto f = [&](Complex z) { return q(-z, 1.0, 0.0) + q(-z, 1.0, 1.0); };
    double R = resolve_damping(f, damping, 0.0, 50.0);
    return damped_ratio_integral(f, R, cfg, diag);
}

double price_call_kernel(const Mgf2& q, double damping, double alpha,
                         const QuadratureConfig& cfg, QuadDiagnostics* diag) {
    if (!(alpha >= 0)) throw Error("price_call_kernel: alpha must be nonnegative");
    if (alpha == 0) return 0.0;
    auto f = [&](Complex z) { return std::pow(alpha, -z) * q(-z, 1.0); };
    double R = resolve_damping(f, damping, -50.0, -1.0);
    return damped_ratio_integral(f, R, cfg, diag);
}

double price_put_kernel(const Mgf2& q, double damping, double alpha,
                        const QuadratureConfig& cfg, QuadDiagnostics* diag) {
    if (!(alpha > 0)) throw Error("price_put_kernel: alpha must be positive");
    auto f = [&](Complex z) { return std::pow(alpha, -z) * q(-z, 1.0); };
    double R = resolve_damping(f, damping, 0.0, 50.0);
    return damped_ratio_integral(f, R, cfg, diag);
}

double digital_2d_kernel(const std::vector<MgfDigital>& q, const std::vector<double>& coeffs,
                         double damping1, double damping2, const QuadratureConfig& cfg,
                         QuadDiagnostics* diag) {
    if (q.size() != coeffs.size()) throw Error("digital_2d_kernel: size mismatch");
    if (q.empty()) return 0.0;
    const double R1 = damping1, R2 = damping2;
    if (!(R2 < 0) || !(R1 + R2 > 1))
        throw DampingInfeasible("digital_2d_kernel: need R2 < 0 and R1 + R2 > 1");
    // finiteness of sum_k q_k at the real damping point
    try {
        Complex probe = 0;
        for (const auto& qk : q) probe += qk(1.0, Complex(R1, 0), Complex(R2, 0));
        if (!finite(probe)) throw DampingInfeasible("digital_2d_kernel: mgf not finite");
    } catch (const DomainError&) {
        throw DampingInfeasible("digital_2d_kernel: damping outside the moment domain");
    }

    auto fhat = [&](double u1, double u2) -> Complex {
        Complex a(R1 + R2, u1 + u2), b(-R2, -u2), c(1 + R1, u1);
        return -std::exp(math::log_gamma(a) + math::log_gamma(b) - math::log_gamma(c));
    };
    auto integrand = [&](double u1, double u2) {
        Complex s = 0;
        for (std::size_t k = 0; k < q.size(); ++k)
            s += coeffs[k] * q[k](1.0, Complex(R1, u1), Complex(R2, u2));
        return (fhat(u1, u2) * s).real();
    };

    // |Gamma| decays like e^{-pi |Im| / 2}; fixed panels to ~40 cover it
    const double U = 40;
    const int panels = 20;
    const double h = 2 * U / panels;
    double total = 0;
    for (int i = 0; i < panels; ++i) {
        double a1 = -U + i * h;
        for (int j = 0; j < panels; ++j) {
            double a2 = -U + j * h;
            auto inner = [&](double u1) {
                return math::gl32_integrate([&](double u2) { return integrand(u1, u2); },
                                            a2, a2 + h);
            };
            total += math::gl32_integrate(inner, a1, a1 + h);
        }
    }
    if (diag) {
        diag->damping_used = R1;
        diag->truncation = U;
        diag->panels = panels * panels;
        diag->converged = true;
    }
    return total / (4 * M_PI * M_PI);
}

}  // namespace rpk::fourier
