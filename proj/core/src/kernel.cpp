#include "perifrac/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "perifrac/common.hpp"
#include "perifrac/quadrature.hpp"

namespace perifrac {

namespace {

double perp_norm(std::span<const double> x, int n) {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("kernel: point dimension does not match params.n");
    double r2 = 0.0;
    for (int i = 1; i < n; ++i) r2 += x[i] * x[i];
    return std::sqrt(r2);
}

// Window half-width needed for tail <= tol given the reduced offset |t| <= 1/2:
// sum_{|k|>k_eff} |t+k|^{-(n+s)} <= (2/(n+s-1)) (k_eff - |t|)^{1-n-s}.
int window_for_tol(double t_abs, double nu2m1, double tol, int k_min) {
    // nu2m1 = n+s-1; solve (2/nu2m1) (k-t)^{-nu2m1} <= tol
    const double k = t_abs + std::pow(2.0 / (nu2m1 * tol), 1.0 / nu2m1);
    const double capped = std::min(k, 1.0e7);
    return std::max(k_min, static_cast<int>(std::ceil(capped)));
}

}  // namespace

double periodic_kernel(double x1, double r_perp, const KernelParams& params) {
    params.validate();
    if (!std::isfinite(x1) || !std::isfinite(r_perp) || r_perp < 0.0)
        throw std::invalid_argument("periodic_kernel: bad point");
    const double t = x1 - std::round(x1);  // reindexing by the nearest image
    const double nu = params.nu();
    const double r2 = r_perp * r_perp;
    const int k_eff = window_for_tol(std::fabs(t), params.n + params.s - 1.0, params.tail_tol,
                                     params.k_max);
    double sum = 0.0;
    // farthest images first so the small terms accumulate before the peak
    for (int k = k_eff; k >= 1; --k) {
        const double dp = t + k, dm = t - k;
        sum += std::pow(dp * dp + r2, -nu) + std::pow(dm * dm + r2, -nu);
    }
    const double d0 = t * t + r2;
    if (d0 == 0.0) throw std::domain_error("periodic_kernel: x is a lattice point");
    sum += std::pow(d0, -nu);
    return sum;
}

double periodic_kernel(std::span<const double> x, const KernelParams& params) {
    return periodic_kernel(x[0], perp_norm(x, params.n), params);
}

double capped_kernel(double x1, double r_perp, double M, const KernelParams& params) {
    params.validate();
    if (!(M > 0.0)) throw std::invalid_argument("capped_kernel: M must be > 0");
    const double t = x1 - std::round(x1);
    const double d2 = t * t + r_perp * r_perp;
    if (d2 == 0.0) return M;
    // the nearest image alone already saturates the cap
    if (std::pow(d2, -params.nu()) >= M) return M;
    const double k = periodic_kernel(x1, r_perp, params);
    return std::min(M, k);
}

double capped_kernel(std::span<const double> x, double M, const KernelParams& params) {
    return capped_kernel(x[0], perp_norm(x, params.n), M, params);
}

double angular_kernel(double a, double rho, double r, const KernelParams& params) {
    params.validate();
    if (a < 0.0 || rho < 0.0 || r < 0.0)
        throw std::invalid_argument("angular_kernel: arguments must be >= 0");
    if (a == 0.0 && rho == r)
        throw std::domain_error("angular_kernel: singular configuration a = 0, rho = r");
    const double nu = params.nu();
    const int n = params.n;
    const double c = a * a + rho * rho + r * r;
    if (n == 2) {
        // S^0 = {-1, +1}
        return std::pow(c - 2.0 * rho * r, -nu) + std::pow(c + 2.0 * rho * r, -nu);
    }
    // t = cos(phi):  |S^{n-3}| int_0^pi sin(phi)^{n-3} (c - 2 rho r cos phi)^{-nu} dphi
    const double b = 2.0 * rho * r;
    const double front = unit_sphere_area(n - 3);
    auto f = [&](double phi) {
        const double core = std::pow(c - b * std::cos(phi), -nu);
        return n == 3 ? core : std::pow(std::sin(phi), n - 3) * core;
    };
    QuadResult q = integrate_adaptive(f, 0.0, pi, 0.0, 1e-9, 48);
    return front * q.value;
}

namespace detail {

double kernel_with_tail(double x1, double r_perp2, const KernelParams& params, int window,
                        double* err_out) {
    const double t = x1 - std::round(x1);
    const double nu = params.nu();
    double sum = 0.0;
    for (int k = window; k >= 1; --k) {
        const double dp = t + k, dm = t - k;
        sum += std::pow(dp * dp + r_perp2, -nu) + std::pow(dm * dm + r_perp2, -nu);
    }
    sum += std::pow(t * t + r_perp2, -nu);
    const double w = std::sqrt(r_perp2);
    double e1 = 0.0, e2 = 0.0;
    sum += image_tail_sum(t, w, nu, window, &e1);
    sum += image_tail_sum(-t, w, nu, window, &e2);
    if (err_out) *err_out = e1 + e2;
    return sum;
}

}  // namespace detail

}  // namespace perifrac
