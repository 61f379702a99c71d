#pragma once

#include <vector>

#include <Eigen/Dense>

namespace qw {

// Landau-gauge walk with Delta xi^(2) = eps^2 B p1 (continuum field B, p1 in sites). The p2 momentum is set
// to zero, which only moves the orbit centre, leaving the reduced 1D operator
//   W = C(f-) F(b x) C(f+) S1,  b = B eps^2,  x = p1 - L/2
// on an open chain of L sites closed by reflecting ends (up <-> down at the boundary), which keeps W unitary.
Eigen::MatrixXcd landau_reduced_operator(double b, int sites);

struct LandauMode {
  double omega = 0.0;           // quasi-energy per step, in (-pi, pi]
  double central_weight = 0.0;  // probability inside the central region
};

// Eigenphases of the reduced operator with |omega| <= omega_max, from the banded Hermitian part
// (W + W^dagger)/2 and sign resolution through (W - W^dagger)/2i on degenerate clusters.
// `central_half_width` is in sites measured from the chain centre.
std::vector<LandauMode> landau_modes(double b, int sites, double omega_max, double central_half_width);

struct LandauOptions {
  double half_width = 0.0;    // chain half width in magnetic lengths; 0 picks sqrt(2 n + 1) + 5
  double edge_margin = 2.5;   // magnetic lengths excluded from the central region
  double min_central_weight = 0.99;
  int free_sites = 512;       // chain length for B = 0
};

// Lowest n_levels non-negative quasi-energies in continuum units (omega / eps), bulk states only.
// Level 0 is the zero mode. Throws std::invalid_argument when fewer levels are resolvable.
std::vector<double> landau_quasienergies(double B, double eps, int n_levels, const LandauOptions& opt = {});

}  // namespace qw
