#pragma once

#include "qwalk/abelian/gauge_field.hpp"
#include "qwalk/core/lattice.hpp"

namespace qw {

// Sigma_a Q = (Q(p + e_a) + Q(p - e_a)) / 2, Delta_a Q = (Q(p + e_a) - Q(p - e_a)) / 2.
//   1D: d0 Q = (Q_{j+1} - Sigma Q_j) / eps,          d1 Q = Delta Q_j / eps
//   2D: d0 Q = (Q_{j+1} - Sigma_1 Sigma_2 Q_j) / eps, d1 Q = Delta_1 Q_j / eps,
//       d2 Q = Delta_2 Sigma_1 Q_j / eps
// d0 has one time slice fewer than Q; spatial derivatives keep every slice.
NodeField lattice_derivative(const NodeField& q, int mu, double eps);

// Single-slice building blocks.
std::vector<double> sym_average(const Lattice& lat, const std::vector<double>& q, int axis);
std::vector<double> half_difference(const Lattice& lat, const std::vector<double>& q, int axis);

// F(mu, nu) = d_mu A_nu - d_nu A_mu, on the first times() - 1 slices of A.
struct FieldStrength {
  int n = 0;
  std::vector<NodeField> c;  // n * n entries, row-major
  const NodeField& operator()(int mu, int nu) const { return c.at(static_cast<std::size_t>(mu * n + nu)); }
};

FieldStrength lattice_field_strength(const AbelianGaugeField& a);

// Psi' = exp(-i phi_j) Psi at time slice j.
SpinorField gauge_transform_field(const SpinorField& psi, const GaugePhase& phi, int j);
// A'_mu = A_mu - d_mu phi. phi needs one time slice more than A.
AbelianGaugeField gauge_transform_potential(const AbelianGaugeField& a, const GaugePhase& phi);

}  // namespace qw
