#include "qwalk/core/coin.hpp"

#include <cmath>

namespace qw {

namespace {

double mod_positive(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

Mat2 build_coin_euler(const CoinAngles& q) {
  const double c = std::cos(q.theta), s = std::sin(q.theta);
  const cplx ea = expi(q.alpha);
  return {ea * expi(q.xi) * c, ea * expi(q.zeta) * s, -ea * expi(-q.zeta) * s, ea * expi(-q.xi) * c};
}

CoinAngles euler_angles(const Mat2& u) {
  CoinAngles q;
  // det U = e^{2 i alpha}; alpha and alpha + pi differ by an overall sign absorbed in xi, zeta.
  q.alpha = mod_positive(0.5 * std::arg(det(u)), pi);
  const cplx ph = expi(-q.alpha);
  const cplx a = ph * u.a, b = ph * u.b;
  q.theta = std::atan2(std::abs(b), std::abs(a));
  // Below tol the phase is rounding noise; pinning it to 0 moves the matrix by at most 2 tol.
  const double tol = 1e-14;
  q.xi = std::abs(a) > tol ? mod_positive(std::arg(a), 2 * pi) : 0.0;
  q.zeta = std::abs(b) > tol ? mod_positive(std::arg(b), 2 * pi) : 0.0;
  return q;
}

CoinAngles canonicalize(const CoinAngles& q) { return euler_angles(build_coin_euler(q)); }

Mat2 standard_coin(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {cplx{c, 0.0}, cplx{0.0, s}, cplx{0.0, s}, cplx{c, 0.0}};
}

Mat2 phase_shift(double omega) {
  return {expi(omega), cplx{0.0, 0.0}, cplx{0.0, 0.0}, expi(-omega)};
}

Mat2 rotation_sigma2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {cplx{c, 0.0}, cplx{s, 0.0}, cplx{-s, 0.0}, cplx{c, 0.0}};
}

Mat2 hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return {cplx{r, 0.0}, cplx{r, 0.0}, cplx{r, 0.0}, cplx{-r, 0.0}};
}

Mat2 pauli(const Vec3& v) {
  return {cplx{v.z, 0.0}, cplx{v.x, -v.y}, cplx{v.x, v.y}, cplx{-v.z, 0.0}};
}

Vec3 pauli_components(const Mat2& m) {
  // tr(m sigma_k) / 2, real part
  Vec3 v;
  v.x = 0.5 * (m.b + m.c).real();
  v.y = 0.5 * (cplx{0.0, 1.0} * (m.b - m.c)).real();
  v.z = 0.5 * (m.a - m.d).real();
  return v;
}

}  // namespace qw
