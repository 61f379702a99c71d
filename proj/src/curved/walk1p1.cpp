#include "qwalk/curved/walk1p1.hpp"

#include <algorithm>
#include <cmath>

namespace qw {

Mat2 curved_coin_1p1(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {cplx{-c, 0.0}, cplx{0.0, s}, cplx{0.0, -s}, cplx{c, 0.0}};
}

double theta_from_speed(double v) {
  if (!(v > 0.0) || v > 1.0) throw std::invalid_argument("speed must lie in (0, 1]");
  return std::acos(v);
}

SpinorField curved_step_1p1(const SpinorField& psi, const NodeField& theta, int j) {
  if (psi.lattice() != theta.lattice()) throw ShapeError("coin profile lattice mismatch");
  const int slice = theta.times() == 1 ? 0 : j;
  CoinField coins(psi.lattice().sites());
  for (std::size_t s = 0; s < coins.size(); ++s) coins[s] = curved_coin_1p1(theta(slice, s));
  return step(psi, coins, 0);
}

NodeField schwarzschild_profile(int sites, double rs, double v_min) {
  NodeField t(Lattice::line(sites), 1);
  for (int r = 0; r < sites; ++r) {
    const double v = r == 0 ? 1.0 : std::clamp(std::abs(1.0 - rs / r), v_min, 1.0);
    t.at(0, r) = std::acos(v);
  }
  return t;
}

}  // namespace qw
