#include "perifrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perifrac {

namespace {

// Kronrod-15 abscissae on [0,1] side (symmetric), with K15 and G7 weights.
// Odd-indexed abscissae are the embedded Gauss-7 nodes.
constexpr double kx[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kw[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gw[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

}  // namespace

QuadResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kx[i];
        double fv;
        if (i == 7) {
            fv = f(c);
            k15 += kw[i] * fv;
            g7 += gw[3] * fv;
        } else {
            const double f1 = f(c - dx);
            const double f2 = f(c + dx);
            k15 += kw[i] * (f1 + f2);
            if (i % 2 == 1) g7 += gw[i / 2] * (f1 + f2);
        }
    }
    QuadResult r;
    r.value = k15 * h;
    const double diff = std::fabs(k15 - g7) * std::fabs(h);
    // standard QUADPACK-style sharpening of the raw difference
    r.error = diff;
    if (diff > 0.0 && r.value != 0.0) {
        const double scaled = std::pow(200.0 * diff / std::fabs(r.value), 1.5) * std::fabs(r.value);
        r.error = std::min(diff, scaled);
    }
    return r;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_depth) {
    struct Seg {
        double a, b;
        QuadResult r;
        int depth;
    };
    std::vector<Seg> stack;
    QuadResult total;
    stack.push_back({a, b, gk15(f, a, b), 0});
    double value_guess = std::fabs(stack[0].r.value);
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        const double tol_here =
            std::max(abs_tol, rel_tol * value_guess) * std::fabs(s.b - s.a) / std::fabs(b - a);
        if (s.r.error <= tol_here || s.depth >= max_depth) {
            total.value += s.r.value;
            total.error += s.r.error;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        stack.push_back({s.a, m, gk15(f, s.a, m), s.depth + 1});
        stack.push_back({m, s.b, gk15(f, m, s.b), s.depth + 1});
    }
    return total;
}

void gk15_nodes(double a, double b, std::vector<double>& xs, std::vector<double>& ws,
                std::vector<double>& gws) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kx[i];
        if (i == 7) {
            xs.push_back(c);
            ws.push_back(kw[i] * h);
            gws.push_back(gw[3] * h);
        } else {
            xs.push_back(c - dx);
            ws.push_back(kw[i] * h);
            gws.push_back(i % 2 == 1 ? gw[i / 2] * h : 0.0);
            xs.push_back(c + dx);
            ws.push_back(kw[i] * h);
            gws.push_back(i % 2 == 1 ? gw[i / 2] * h : 0.0);
        }
    }
}

double power_tail_integral(double b, double w, double nu) {
    if (b < 0.0) throw std::invalid_argument("power_tail_integral: b < 0");
    if (w <= 0.0) {
        if (b <= 0.0) throw std::invalid_argument("power_tail_integral: b = w = 0");
        return std::pow(b, 1.0 - 2.0 * nu) / (2.0 * nu - 1.0);
    }
    // tau = w tan(theta): integral = w^{1-2nu} int_{theta0}^{pi/2} cos^{2nu-2} dtheta
    const double theta0 = std::atan2(b, w);
    const double half = 0.5 * (1.5707963267948966 - theta0);
    if (half <= 0.0) return 0.0;
    const double mid = theta0 + half;
    // 10-point Gauss on the theta interval; integrand is entire in theta
    static const double x10[5] = {0.148874338981631210884826001130,
                                  0.433395394129247190799265943166,
                                  0.679409568299024406234327365115,
                                  0.865063366688984510732096688423,
                                  0.973906528517171720077964012084};
    static const double w10[5] = {0.295524224714752870173892994651,
                                  0.269266719309996355091226921569,
                                  0.219086362515982043995534934228,
                                  0.149451349150580593145776339657,
                                  0.066671344308688137593568809893};
    const double p = 2.0 * nu - 2.0;
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double d = half * x10[i];
        acc += w10[i] * (std::pow(std::cos(mid - d), p) + std::pow(std::cos(mid + d), p));
    }
    return std::pow(w, 1.0 - 2.0 * nu) * half * acc;
}

double image_tail_sum(double t, double w, double nu, int k0, double* err) {
    // sum_{k>k0} ((t+k)^2+w^2)^{-nu}: integrand decreasing in k, so the sum is
    // bracketed by [int_{k0+1+t}, int_{k0+t}] shifted integrals.
    const double hi = power_tail_integral(k0 + t, w, nu);
    const double lo = power_tail_integral(k0 + 1 + t, w, nu);
    if (err) *err = 0.5 * (hi - lo);
    return 0.5 * (hi + lo);
}

}  // namespace perifrac
