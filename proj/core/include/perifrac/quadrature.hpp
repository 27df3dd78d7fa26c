#pragma once

#include <functional>
#include <vector>

namespace perifrac {

/// Result of a quadrature pass: value plus a two-level error estimate.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

/// Gauss-Kronrod 7-15 on [a,b]; error = |K15 - G7| based estimate.
QuadResult gk15(const std::function<double(double)>& f, double a, double b);

/// Adaptive bisection driven by the embedded error estimate.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_depth = 48);

/// Nodes/weights of the 15-point Kronrod rule mapped to [a,b] appended to xs/ws,
/// with the matching 7-point Gauss weights in gws (zero on Kronrod-only nodes).
void gk15_nodes(double a, double b, std::vector<double>& xs, std::vector<double>& ws,
                std::vector<double>& gws);

/// int_b^inf (tau^2 + w^2)^{-nu} dtau for b >= 0, w >= 0 (not both zero).
/// Uses tau = w tan(theta); smooth for every b/w ratio.
double power_tail_integral(double b, double w, double nu);

/// sum_{k > k0} ((t + k)^2 + w^2)^{-nu} for integer k, as bracket midpoint;
/// half-width of the bracket is returned in err.
double image_tail_sum(double t, double w, double nu, int k0, double* err);

}  // namespace perifrac
