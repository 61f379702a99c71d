#pragma once

#include "qwalk/abelian/gauge_field.hpp"
#include "qwalk/core/evolve.hpp"

namespace qw {

// B(theta) = [[-cos, i sin], [-i sin, cos]] = -sigma_3 C(-theta).
Mat2 curved_coin_1p1(double theta);

// Two consecutive steps of the B(theta) walk make one time unit; the resulting
// transport speed is cos(theta), i.e. metric diag(1, -1 / cos^2 theta).
inline double speed_from_theta(double theta) { return std::cos(theta); }
double theta_from_speed(double v);

// Shift then B(theta_{j,p}). theta is a NodeField on a 1D lattice; a single time slice is reused for all j.
SpinorField curved_step_1p1(const SpinorField& psi, const NodeField& theta, int j);

// Horizon-like profile: v(r) = clamp(|1 - r_s / r|, v_min, 1) with r the site index (v = 1 at r = 0).
NodeField schwarzschild_profile(int sites, double rs, double v_min);

}  // namespace qw
