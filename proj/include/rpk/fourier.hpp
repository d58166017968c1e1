#pragma once

#include <complex>
#include <functional>

#include "rpk/errors.hpp"

namespace rpk::fourier {

using Complex = std::complex<double>;

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double max_truncation = 1e7;   // upper bound on the integration range
    double first_panel = 4.0;      // width of the first Gauss-Legendre panel
    double panel_growth = 1.6;

    // default damping per kernel; auto-shifted toward feasibility in 0.25 steps
    double damping_floor = 1.5;    // floor/put kernels, R > 0
    double damping_call = -2.5;    // call kernel, R < -1
    double damping_digital_1 = 2.5;
    double damping_digital_2 = -1.2;
};

struct QuadDiagnostics {
    double damping_used = 0;
    double truncation = 0;   // last integration point
    int panels = 0;
    double tail_bound = 0;   // sup over the last panel of |integrand| * u^2
    bool converged = false;
};

// (1/pi) * int_0^inf Re[ f(R+iu) / ((R+iu)(1+R+iu)) ] du with adaptive panel
// growth. f may throw DomainError, which marks the damping infeasible.
double damped_ratio_integral(const std::function<Complex(Complex)>& f, double damping,
                             const QuadratureConfig& cfg, QuadDiagnostics* diag = nullptr);

// picks the first feasible damping from a 0.25-step ladder starting at `start`;
// feasibility means f evaluates finitely at the real point. lo/hi bound the scan.
double resolve_damping(const std::function<Complex(Complex)>& f, double start, double lo,
                       double hi);

// moment generating functions as callables
using Mgf3 = std::function<Complex(Complex, double, double)>;  // q(z1, z2, z3)
using Mgf2 = std::function<Complex(Complex, double)>;          // q(z1, z2)

// E[(1+e^{Y3}) e^{Y2} (1-e^{Y1})^+], R > 0
double price_floor_kernel(const Mgf3& q, double damping, const QuadratureConfig& cfg = {},
                          QuadDiagnostics* diag = nullptr);

// E[e^{Y2} (alpha e^{Y1} - 1)^+], R < -1
double price_call_kernel(const Mgf2& q, double damping, double alpha,
                         const QuadratureConfig& cfg = {}, QuadDiagnostics* diag = nullptr);

// E[e^{Y2} (1 - alpha e^{Y1})^+], R > 0
double price_put_kernel(const Mgf2& q, double damping, double alpha,
                        const QuadratureConfig& cfg = {}, QuadDiagnostics* diag = nullptr);

// E[(sum_k c_k e^{W_k}) 1{e^{Y1} - e^{Y2} - 1 > 0}], R2 < 0, R1 + R2 > 1.
// q_k(u, z1, z2) = E[e^{u W_k + z1 Y1 + z2 Y2}]
using MgfDigital = std::function<Complex(double, Complex, Complex)>;
double digital_2d_kernel(const std::vector<MgfDigital>& q,
                         const std::vector<double>& coeffs, double damping1,
                         double damping2, const QuadratureConfig& cfg = {},
                         QuadDiagnostics* diag = nullptr);

}  // namespace rpk::fourier
