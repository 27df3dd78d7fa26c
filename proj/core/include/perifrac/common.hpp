#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace perifrac {

inline constexpr double pi = 3.14159265358979323846;

/// Volume of the unit ball of R^d (d >= 0).
inline double unit_ball_volume(int d) {
    if (d < 0) throw std::invalid_argument("unit_ball_volume: d < 0");
    return std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

/// Surface measure of the unit sphere S^d in R^{d+1} (d >= 0).
inline double unit_sphere_area(int d) {
    if (d < 0) throw std::invalid_argument("unit_sphere_area: d < 0");
    return 2.0 * std::pow(pi, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

/// int_R (1+u^2)^{-nu} du = sqrt(pi) Gamma(nu-1/2) / Gamma(nu), nu > 1/2.
inline double line_kernel_mass(double nu) {
    return std::sqrt(pi) * std::tgamma(nu - 0.5) / std::tgamma(nu);
}

/// xoshiro256++ with splitmix64 seeding; identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            si = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// uniform in [0,1)
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
    /// uniform in (0,1]  (safe for logs and inverse powers)
    double uniform_pos() { return ((next_u64() >> 11) + 1) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double normal() {
        // Box-Muller, cached second value
        if (has_cache_) {
            has_cache_ = false;
            return cache_;
        }
        double u1 = uniform_pos(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        cache_ = r * std::sin(2.0 * pi * u2);
        has_cache_ = true;
        return r * std::cos(2.0 * pi * u2);
    }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t s_[4];
    double cache_ = 0.0;
    bool has_cache_ = false;
};

/// Global worker cap for the few loops that parallelize. 0 = hardware default.
void set_max_threads(int t);
int max_threads();

/// Runs fn(chunk) over fixed-size chunks and reduces partial sums in index
/// order, so results do not depend on the worker count.
double parallel_sum_chunks(std::int64_t count, std::int64_t chunk,
                           const std::function<double(std::int64_t, std::int64_t)>& fn);

}  // namespace perifrac
