#pragma once

namespace perifrac {

/// Overlap and deficit geometry of balls in R^d, d = n-1 >= 1.
/// All functions take the center separation w >= 0.
///
/// ball_overlap      V(w)  = |B_P cap (B_Q + w e)|
/// ball_deficit      G(w)  = |B_P| - V(w)            (stable for w -> 0)
/// shell_in_ball     dV/dP = H^{d-1}(dB_P cap (B_Q + w e))
///
/// d = 1 and d = 2 are closed forms; d >= 3 integrates concentric slices.
struct BallGeometry {
    int d;  // ambient dimension of the balls

    explicit BallGeometry(int dim);

    double ball_volume(double r) const;
    double ball_overlap(double P, double Q, double w) const;
    /// |B_P| - V; computed without cancellation as w -> 0 or P ~ Q.
    double ball_deficit(double P, double Q, double w) const;
    /// measure of the part of the sphere of radius P inside B_Q shifted by w
    double shell_in_ball(double P, double Q, double w) const;
    /// measure of the part of the sphere of radius P outside B_Q shifted by w
    double shell_out_ball(double P, double Q, double w) const;

  private:
    double vd_;    // unit ball volume in R^d
    double vdm1_;  // unit ball volume in R^{d-1}
    double sd_;    // |S^{d-1}|
};

}  // namespace perifrac
