#include "perifrac/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "perifrac/common.hpp"

namespace perifrac {

Profile::Profile(std::vector<double> values, int n) : values_(std::move(values)), n_(n) {
    if (n_ < 2) throw std::invalid_argument("Profile: n must be >= 2");
    if (values_.empty()) throw std::invalid_argument("Profile: empty grid");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0)
            throw std::invalid_argument("Profile: values must be finite and >= 0");
        if (i > 0 && values_[i] > values_[i - 1] * (1.0 + 1e-12) + 1e-300)
            throw std::invalid_argument("Profile: values must be nonincreasing");
    }
    // snap tiny monotonicity violations from round-off
    for (std::size_t i = 1; i < values_.size(); ++i)
        values_[i] = std::min(values_[i], values_[i - 1]);
}

double Profile::max_value() const { return values_.front(); }

double Profile::radius_at(double x1) const {
    const double a = std::fabs(x1);
    if (a > 0.5) throw std::invalid_argument("Profile::radius_at: |x1| > 1/2");
    int i = static_cast<int>(a * 2.0 * m());
    i = std::min(i, m() - 1);
    return values_[i];
}

bool Profile::contains(double x1, double r_perp) const { return r_perp <= radius_at(x1); }

Profile Profile::cylinder(double radius, int m, int n) {
    if (radius < 0.0) throw std::invalid_argument("Profile::cylinder: radius < 0");
    return Profile(std::vector<double>(m, radius), n);
}

Profile Profile::ball(double r0, int m, int n) {
    if (!(r0 > 0.0) || r0 > 0.5)
        throw std::invalid_argument("Profile::ball: need 0 < r0 <= 1/2");
    std::vector<double> v(m);
    const double dx = 0.5 / m;
    for (int i = 0; i < m; ++i) {
        const double x = (i + 0.5) * dx;
        v[i] = x < r0 ? std::sqrt((r0 - x) * (r0 + x)) : 0.0;
    }
    return Profile(std::move(v), n);
}

Profile Profile::random_monotone(std::uint64_t seed, int m, int n, double scale) {
    Rng rng(seed);
    std::vector<double> v(m);
    for (auto& x : v) x = rng.uniform_pos() * scale;
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Profile(std::move(v), n);
}

void AxiBall::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("AxiBall: radius must be > 0");
    if (std::fabs(center_x1) > 0.5)
        throw std::invalid_argument("AxiBall: center must lie in [-1/2, 1/2]");
}

double volume(const Profile& p) {
    const double vn1 = unit_ball_volume(p.n() - 1);
    double acc = 0.0;
    for (int i = p.m() - 1; i >= 0; --i) acc += std::pow(p.value(i), p.n() - 1);
    return 2.0 * vn1 * acc * p.dx();
}

Profile rescale_to_volume(const Profile& p, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("rescale_to_volume: mu must be > 0");
    const double v = volume(p);
    if (v <= 0.0) throw std::domain_error("rescale_to_volume: profile has zero volume");
    const double lambda = std::pow(mu / v, 1.0 / (p.n() - 1));
    std::vector<double> vals = p.values();
    for (auto& x : vals) x *= lambda;
    return Profile(std::move(vals), p.n());
}

double ball_radius_for_volume(double mu, int n) {
    return std::pow(mu / unit_ball_volume(n), 1.0 / n);
}

double profile_ball_overlap(const Profile& p, const AxiBall& ball) {
    ball.validate();
    const int n = p.n();
    const double vn1 = unit_ball_volume(n - 1);
    const double r = ball.radius;
    const double c = ball.center_x1;
    // slice radii of both bodies are concentric (n-1)-balls; integrate the
    // min-radius ball volume over x1 with a fixed subgrid per profile cell
    const int sub = 32;
    const double h = p.dx() / sub;
    double acc = 0.0;
    for (int i = 0; i < p.m(); ++i) {
        const double f = p.value(i);
        const double base = i * p.dx();
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            for (int j = 0; j < sub; ++j) {
                const double x = sgn * (base + (j + 0.5) * h);
                const double dxc = x - c;
                if (std::fabs(dxc) >= r) continue;
                const double g = std::sqrt((r - dxc) * (r + dxc));
                acc += std::pow(std::min(f, g), n - 1) * h;
            }
        }
    }
    return vn1 * acc;
}

double fraenkel_deficit(const Profile& p) {
    const double vol = volume(p);
    if (vol <= 0.0) throw std::domain_error("fraenkel_deficit: profile has zero volume");
    const double rb = ball_radius_for_volume(vol, p.n());
    auto sym_diff = [&](double c) {
        AxiBall b{c, rb};
        const double inter = profile_ball_overlap(p, b);
        return (2.0 * vol - 2.0 * inter) / vol;  // |E|+|B|-2|EnB|, |B|=|E|
    };
    // golden-section over the ball center on the axis
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = -0.5, b = 0.5;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = sym_diff(c1), f2 = sym_diff(c2);
    while (b - a > 1e-6) {
        if (f1 <= f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = sym_diff(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = sym_diff(c2);
        }
    }
    const double best = std::min({f1, f2, sym_diff(0.5 * (a + b))});
    return std::clamp(best, 0.0, 2.0);
}

}  // namespace perifrac
