#pragma once

#include <cstdint>
#include <vector>

namespace perifrac {

/// Even, nonincreasing radial profile sampled at x1 = (i+1/2)/(2m), i = 0..m-1,
/// covering (0, 1/2]. The represented set is the body of revolution
///   F = {(x1, x') in S : |x'| <= f(|x1|)}
/// with f piecewise constant on the grid cells and even in x1.
class Profile {
  public:
    Profile(std::vector<double> values, int n);

    int n() const { return n_; }
    int m() const { return static_cast<int>(values_.size()); }
    double dx() const { return 0.5 / m(); }          ///< cell width 1/(2m)
    double node(int i) const { return (i + 0.5) * dx(); }
    double value(int i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    double max_value() const;

    /// f(|x1|) for |x1| <= 1/2 (piecewise-constant cell lookup)
    double radius_at(double x1) const;

    /// true when x = (x1, |x'| = r_perp) lies in the set (one period)
    bool contains(double x1, double r_perp) const;

    static Profile cylinder(double radius, int m, int n);
    /// spherical profile f(x1) = sqrt(r0^2 - x1^2) for |x1| <= r0 (requires r0 <= 1/2)
    static Profile ball(double r0, int m, int n);
    static Profile random_monotone(std::uint64_t seed, int m, int n, double scale = 0.3);

  private:
    std::vector<double> values_;
    int n_;
};

/// Axis-centered comparison ball for the asymmetry computation.
struct AxiBall {
    double center_x1 = 0.0;  ///< in [-1/2, 1/2]
    double radius = 0.0;     ///< > 0

    void validate() const;
};

/// |F| = 2 v_{n-1} sum_i f_i^{n-1} dx  (exact for the piecewise-constant set)
double volume(const Profile& p);

/// Scale the profile so its volume becomes mu (monotonicity is preserved).
Profile rescale_to_volume(const Profile& p, double mu);

/// Fraenkel asymmetry against axis-centered balls of equal volume, computed
/// slice-wise and minimized over the center by golden-section search.
double fraenkel_deficit(const Profile& p);

/// |E cap B| for the profile set and an axis ball (slice-wise overlap).
double profile_ball_overlap(const Profile& p, const AxiBall& ball);

/// radius of the n-ball with volume mu
double ball_radius_for_volume(double mu, int n);

}  // namespace perifrac
