#include "qwalk/abelian/current.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/abelian/derivatives.hpp"

namespace qw {

namespace {

// Spin-major internal index: the first half of the components is up, the second half down.
std::vector<double> polarisation(const SpinorField& psi) {
  const int half = psi.internal_dim() / 2;
  std::vector<double> r(psi.lattice().sites(), 0.0);
  for (std::size_t s = 0; s < r.size(); ++s)
    for (int a = 0; a < half; ++a) r[s] += std::norm(psi.at(s, half + a)) - std::norm(psi.at(s, a));
  return r;
}

void check(const SpinorField& a, const SpinorField& b) {
  if (!a.same_shape(b) || a.internal_dim() % 2 != 0) throw ShapeError("current needs matching fields with spin");
}

void check_2d(const SpinorField& a, const SpinorField& b) {
  if (!a.same_shape(b) || a.internal_dim() != 2) throw ShapeError("current needs matching 2-component fields");
}

}  // namespace

CurrentSlice lattice_current_1d(const SpinorField& psi, int sign) {
  if (psi.internal_dim() % 2 != 0) throw ShapeError("current needs a field with spin");
  CurrentSlice c;
  c.j0 = psi.density();
  c.j1 = polarisation(psi);
  for (double& x : c.j1) x *= sign;
  return c;
}

double continuity_residual_1d(const SpinorField& psi, const SpinorField& next, double eps, int sign) {
  check(psi, next);
  const Lattice& lat = psi.lattice();
  const CurrentSlice c = lattice_current_1d(psi, sign);
  const auto n0 = next.density();
  const auto avg = sym_average(lat, c.j0, 0);
  const auto dj = half_difference(lat, c.j1, 0);
  double r = 0.0;
  for (std::size_t s = 0; s < n0.size(); ++s) r = std::max(r, std::abs((n0[s] - avg[s] + dj[s]) / eps));
  return r;
}

CurrentSlice lattice_current_2d(const SpinorField& psi, const SpinorField& half) {
  check_2d(psi, half);
  CurrentSlice c;
  c.j0 = psi.density();
  c.j1 = sym_average(psi.lattice(), polarisation(psi), 1);
  c.j2 = polarisation(half);
  return c;
}

double continuity_residual_2d(const SpinorField& psi, const SpinorField& half, const SpinorField& next, double eps) {
  check_2d(psi, next);
  const Lattice& lat = psi.lattice();
  const CurrentSlice c = lattice_current_2d(psi, half);
  const auto n0 = next.density();
  const auto avg = sym_average(lat, sym_average(lat, c.j0, 0), 1);
  const auto d1 = half_difference(lat, c.j1, 0);
  const auto d2 = half_difference(lat, c.j2, 1);
  double r = 0.0;
  for (std::size_t s = 0; s < n0.size(); ++s) r = std::max(r, std::abs((n0[s] - avg[s] + d1[s] + d2[s]) / eps));
  return r;
}

}  // namespace qw
