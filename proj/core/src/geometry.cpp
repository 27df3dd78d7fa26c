#include "perifrac/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "perifrac/common.hpp"

namespace perifrac {

namespace {

// 16-point Gauss-Legendre on [-1,1], positive half (symmetric).
constexpr double g16x[8] = {0.095012509837637440185, 0.281603550779258913230,
                            0.458016777657227386342, 0.617876244402643748447,
                            0.755404408355003033895, 0.865631202387831743880,
                            0.944575023073232576078, 0.989400934991649932596};
constexpr double g16w[8] = {0.189450610455068496285, 0.182603415044923588867,
                            0.169156519395002538189, 0.149595988816576732081,
                            0.124628971255533872052, 0.095158511682492784810,
                            0.062253523938647892863, 0.027152459411754094852};

// Chord of two circles radius P (center 0) and Q (center w): abscissa x along
// the center line and half-height y of the intersection points.
struct Chord {
    double x, y;
};

Chord disk_chord(double P, double Q, double w) {
    Chord c;
    c.x = 0.5 * (w + (P - Q) * (P + Q) / w);
    const double y2 = (P - c.x) * (P + c.x);
    c.y = y2 > 0.0 ? std::sqrt(y2) : 0.0;
    return c;
}

}  // namespace

BallGeometry::BallGeometry(int dim) : d(dim) {
    if (dim < 1) throw std::invalid_argument("BallGeometry: dimension must be >= 1");
    vd_ = unit_ball_volume(dim);
    vdm1_ = unit_ball_volume(dim - 1);
    sd_ = unit_sphere_area(dim - 1);
}

double BallGeometry::ball_volume(double r) const { return vd_ * std::pow(r, d); }

double BallGeometry::ball_deficit(double P, double Q, double w) const {
    if (P <= 0.0) return 0.0;
    if (Q <= 0.0 || w >= P + Q) return ball_volume(P);
    const double D = P - Q;
    if (w <= -D) return 0.0;  // B_P inside the shifted B_Q
    if (d == 1) {
        // left spill [-P, w-Q) and right spill (w+Q, P], each formed from
        // the exact difference D so tiny spills survive rounding
        const double left = std::clamp(w + D, 0.0, 2.0 * P);
        const double right = std::clamp(D - w, 0.0, 2.0 * P);
        return std::min(left + right, 2.0 * P);
    }
    if (d == 2) {
        if (w <= D) return pi * D * (P + Q);  // annulus, B_Q+w inside B_P
        const Chord c = disk_chord(P, Q, w);
        // pi P^2 - lens rearranged so every term vanishes with the deficit:
        //   P^2 (pi - alpha - beta) + (P^2 - Q^2) beta + w y
        // with pi - alpha - beta = atan2(w y, P^2 - w x).
        const double beta = std::atan2(c.y, w - c.x);
        return P * P * std::atan2(w * c.y, P * P - w * c.x) + D * (P + Q) * beta + w * c.y;
    }
    // d >= 3: slices orthogonal to the center line are concentric (d-1)-balls;
    // slice radii a (of B_P) and b (of B_Q + w), deficit v_{d-1}(a^{d-1}-b^{d-1})_+.
    const double c0 = 0.0, h = P;
    const int dm = d - 1;
    auto slice = [&](double u) {
        const double a2 = (P - u) * (P + u);
        if (a2 <= 0.0) return 0.0;
        const double a = std::sqrt(a2);
        const double b2 = a2 - (D * (P + Q) - 2.0 * u * w + w * w);  // Q^2-(u-w)^2, stable
        if (b2 <= 0.0) return std::pow(a, dm);
        const double b = std::sqrt(b2);
        if (b >= a) return 0.0;
        // a^dm - b^dm via the stable difference a-b = (a^2-b^2)/(a+b)
        const double amb = (a2 - b2) / (a + b);
        double poly = 0.0, pa = 1.0;
        for (int j = 0; j < dm; ++j) {
            poly += pa * std::pow(b, dm - 1 - j);
            pa *= a;
        }
        return amb * poly;
    };
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        acc += g16w[i] * (slice(c0 - h * g16x[i]) + slice(c0 + h * g16x[i]));
    }
    return vdm1_ * h * acc;
}

double BallGeometry::ball_overlap(double P, double Q, double w) const {
    if (P <= 0.0 || Q <= 0.0 || w >= P + Q) return 0.0;
    if (w <= std::fabs(P - Q)) return ball_volume(std::min(P, Q));
    return ball_volume(P) - ball_deficit(P, Q, w);
}

double BallGeometry::shell_in_ball(double P, double Q, double w) const {
    if (P <= 0.0 || Q <= 0.0) return 0.0;
    if (w >= P + Q) return 0.0;
    if (w <= Q - P) return sd_ * std::pow(P, d - 1);
    if (w <= P - Q) return 0.0;
    if (d == 1) {
        double cnt = 0.0;
        if (std::fabs(P - w) <= Q) cnt += 1.0;
        if (std::fabs(P + w) <= Q) cnt += 1.0;
        return cnt;
    }
    if (d == 2) {
        const Chord c = disk_chord(P, Q, w);
        return 2.0 * P * std::atan2(c.y, c.x);
    }
    // d >= 3: spherical cap {theta < theta*} with cos(theta*) = x/P
    const Chord c = disk_chord(P, Q, w);
    const double t0 = std::acos(std::clamp(c.x / P, -1.0, 1.0));
    const double sc = unit_sphere_area(d - 2) * std::pow(P, d - 1);
    const double h = 0.5 * t0;
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        acc += g16w[i] * (std::pow(std::sin(h - h * g16x[i]), d - 2) +
                          std::pow(std::sin(h + h * g16x[i]), d - 2));
    }
    return sc * h * acc;
}

double BallGeometry::shell_out_ball(double P, double Q, double w) const {
    if (P <= 0.0) return 0.0;
    const double full = sd_ * std::pow(P, d - 1);
    if (Q <= 0.0 || w >= P + Q) return full;
    if (w <= Q - P) return 0.0;
    if (w <= P - Q) return full;
    if (d == 1) {
        double cnt = 0.0;
        if (std::fabs(P - w) > Q) cnt += 1.0;
        if (std::fabs(P + w) > Q) cnt += 1.0;
        return cnt;
    }
    if (d == 2) {
        const Chord c = disk_chord(P, Q, w);
        return 2.0 * P * std::atan2(c.y, -c.x);  // 2P(pi - alpha)
    }
    return full - shell_in_ball(P, Q, w);
}

}  // namespace perifrac
