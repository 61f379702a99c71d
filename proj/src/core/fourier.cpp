#include "qwalk/core/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace qw {

double reduce_quasimomentum(double k) {
  double r = std::fmod(k + pi, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  r -= pi;
  if (r >= pi) r -= 2.0 * pi;
  return r;
}

Mat2 walk_operator_fourier(double k, const CoinAngles& angles) {
  return build_coin_euler(angles) * phase_shift(k);
}

Dispersion dispersion(double theta, double xi, double k) {
  const double c = std::clamp(std::cos(theta) * std::cos(k + xi), -1.0, 1.0);
  // atan2(0, 0) would send the pole E = pi to 0
  const double e = c <= -1.0 ? pi : 2.0 * std::atan2(std::sqrt(1.0 - c * c), 1.0 + c);
  return {e, -e};
}

std::array<cplx, 2> eigenvalues(const Mat2& m) {
  const cplx tr = m.a + m.d;
  const cplx disc = std::sqrt(tr * tr - 4.0 * det(m));
  cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
  // Recompute the smaller root from the product to avoid cancellation.
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  if (std::abs(l1) > 0.0) l2 = det(m) / l1;
  if (std::arg(l1) < std::arg(l2)) std::swap(l1, l2);
  return {l1, l2};
}

}  // namespace qw
