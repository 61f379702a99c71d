#pragma once

#include <vector>

#include "qwalk/curved/walk1p2.hpp"

namespace qw {

enum class GwPolarization {
  diagonal_traceless,  // G_XX = -1 - xi G(T), G_YY = -1 + xi G(T)
  off_diagonal,        // G_XY = xi G(T)
};

// Spatial metric (G_XX, G_YY, G_XY) of the perturbed flat metric.
std::array<double, 3> gw_metric(double xi, double profile, GwPolarization pol);

// Positive-energy eigenvector (unit norm) of the flat two-step operator at (k1, k2), and its energy.
std::pair<std::array<cplx, 2>, double> flat_positive_mode(double k1, double k2, double headroom);

// Equal-weight superposition of the flat positive-energy modes at (k, 0) and (0, k); normalized.
// k must be an integer multiple of 2 pi / extent on both axes.
SpinorField gw_two_mode_state(double k, const Lattice& lat, double headroom = 2.0);

struct GwChange {
  std::vector<double> relative;  // (rho_after - rho_before) / rho_before per site
  double max_abs = 0.0;
};

// One time unit (an even and an odd lattice step) under the homogeneous perturbed metric; |xi| <= 0.05.
GwChange gw_relative_density_change(const SpinorField& state, double xi, double profile, GwPolarization pol,
                                    double headroom = 2.0);

}  // namespace qw
