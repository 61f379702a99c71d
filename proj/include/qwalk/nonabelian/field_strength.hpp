#pragma once

#include <vector>

#include "qwalk/nonabelian/links.hpp"

namespace qw {

// Holonomy around the elementary diamond with corners (j, p), (j+1, p-1), (j+1, p+1), (j+2, p):
//   F_{j,p} = [U+_{j+1,p} U-_{j,p+1}] [U-_{j+1,p} U+_{j,p-1}]^{-1}
// Covariant: F' = G_{j+2,p} F G_{j+2,p}^{-1}. Identity for a pure gauge.
std::vector<Eigen::MatrixXcd> lattice_field_strength_covariant(const GroupLinkPair& at_j, const GroupLinkPair& at_j1);

// (F - 1) / (-2 i eps^2), which tends to d0 B1 - d1 B0 - i [B0, B1] at (t_{j+1}, x_p) for the continuum
// potentials B0 = b0 / eps, B1 = -b1 / eps.
Eigen::MatrixXcd extract_field_strength(const Eigen::MatrixXcd& f, double eps);

}  // namespace qw
