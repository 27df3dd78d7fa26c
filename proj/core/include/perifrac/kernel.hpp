#pragma once

#include <span>
#include <stdexcept>

namespace perifrac {

/// Parameters of the periodized singular kernel
///   K(x) = sum_k |x + k e1|^{-(n+s)},  x = (x1, x') in R x R^{n-1}.
struct KernelParams {
    int n = 3;               ///< ambient dimension, n >= 2
    double s = 0.5;          ///< fractional order, 0 < s < 1
    int k_max = 8;           ///< minimum half-width of the summed image window
    double tail_tol = 1e-10; ///< bound on the neglected series tail

    void validate() const {
        if (n < 2) throw std::invalid_argument("KernelParams: n must be >= 2");
        if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("KernelParams: s must be in (0,1)");
        if (k_max < 1) throw std::invalid_argument("KernelParams: k_max must be >= 1");
        if (!(tail_tol > 0.0)) throw std::invalid_argument("KernelParams: tail_tol must be > 0");
    }

    double nu() const { return 0.5 * (n + s); }
};

/// K at (x1, |x'|). Sums an adaptive window of images; the window is enlarged
/// until the integral-comparison bound on the dropped tail is below tail_tol.
/// The returned value underestimates K by at most tail_tol.
/// Throws std::domain_error when an image in the window is a lattice point.
double periodic_kernel(double x1, double r_perp, const KernelParams& params);

/// K at a full point x (x.size() == n).
double periodic_kernel(std::span<const double> x, const KernelParams& params);

/// h_M = min(M, K); defined everywhere, equals M on the singular lattice.
double capped_kernel(double x1, double r_perp, double M, const KernelParams& params);
double capped_kernel(std::span<const double> x, double M, const KernelParams& params);

/// Angular reduction of the kernel over one sphere:
///   A(a, rho, r) = int_{S^{n-2}} (a^2 + rho^2 + r^2 - 2 rho r t)^{-(n+s)/2} dH(omega),
/// t the cosine of the polar angle. Exact two-point sum for n = 2; for n >= 3
/// the polar substitution t = cos(phi) removes the endpoint weight and the
/// integral is evaluated adaptively to relative accuracy 1e-8.
/// Throws std::domain_error when a = 0 and rho = r.
double angular_kernel(double a, double rho, double r, const KernelParams& params);

namespace detail {
/// K with a bracket-midpoint analytic tail added; |remaining error| <= err_out.
/// Faster and sharper than the public adaptive-window op; used by Monte Carlo.
double kernel_with_tail(double x1, double r_perp2, const KernelParams& params, int window,
                        double* err_out);
}  // namespace detail

}  // namespace perifrac
