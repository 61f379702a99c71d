#include "qwalk/curved/walk1p2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/abelian/em2d.hpp"

namespace qw {

namespace {

using V3 = std::array<double, 3>;

double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const V3& a) { return std::sqrt(dot(a, a)); }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
V3 scale(const V3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 add(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

V3 rot_x(double b, const V3& v) {
  const double c = std::cos(b), s = std::sin(b);
  return {v[0], c * v[1] - s * v[2], s * v[1] + c * v[2]};
}
V3 rot_y(double p, const V3& v) {
  const double c = std::cos(p), s = std::sin(p);
  return {c * v[0] + s * v[2], v[1], -s * v[0] + c * v[2]};
}

// SU(2) element q0 + i q.sigma with q = a x b, q0 = 1 + a.b, normalized (unit vectors a, b).
Mat2 su2_between(const V3& a, const V3& b) {
  double q0 = 1.0 + dot(a, b);
  V3 q = cross(a, b);
  if (q0 < 1e-12) {
    // Antiparallel: half turn about any axis orthogonal to a.
    V3 axis = std::abs(a[0]) < 0.9 ? V3{1.0, 0.0, 0.0} : V3{0.0, 0.0, 1.0};
    axis = sub(axis, scale(a, dot(axis, a)));
    q0 = 0.0;
    q = scale(axis, 1.0 / norm(axis));
  }
  const double n = std::sqrt(q0 * q0 + dot(q, q));
  q0 /= n;
  q = scale(q, 1.0 / n);
  return {cplx{q0, q[2]}, cplx{q[1], q[0]}, cplx{-q[1], q[0]}, cplx{q0, -q[2]}};
}

// Pauli vector of U^{-1} (v.sigma) U.
V3 conjugate(const Mat2& u, const V3& v) {
  const Vec3 r = pauli_components(dagger(u) * pauli({v[0], v[1], v[2]}) * u);
  return {r.x, r.y, r.z};
}

}  // namespace

CurvedCoins curved_coins_1p2(const TriadValue& t, double delta_theta, double headroom) {
  if (!(headroom >= 1.0)) throw std::invalid_argument("headroom must be >= 1");
  const V3 x = {0.0, -t.b / headroom, t.e1 / headroom};
  const V3 y = {0.0, -t.e2 / headroom, t.b / headroom};
  const double nx = norm(x);
  const double tol = 1e-12;
  if (nx > 1.0 + tol || nx == 0.0)
    throw std::invalid_argument("triad outside the walk light cone (|X| = " + std::to_string(nx) + "), raise headroom");
  // Frame rotation O = R_y(phi) R_x(-beta) takes X/|X| to z and tilts by phi, cos phi = |X|.
  const double beta = std::atan2(t.b, t.e1);
  const double phi = std::acos(std::min(nx, 1.0));
  const V3 yp = rot_y(phi, rot_x(-beta, y));
  const double ny = norm(yp);
  if (ny > 1.0 + tol || ny == 0.0)
    throw std::invalid_argument("triad outside the walk light cone (|Y'| = " + std::to_string(ny) + "), raise headroom");
  const double psi = std::acos(std::min(ny, 1.0));
  const V3 yh = scale(yp, 1.0 / ny);
  V3 w = sub(V3{1.0, 0.0, 0.0}, scale(yh, yh[0]));
  w = scale(w, 1.0 / norm(w));
  const V3 v1 = add(scale(yh, std::cos(psi)), scale(w, std::sin(psi)));
  const V3 v2 = sub(scale(yh, std::cos(psi)), scale(w, std::sin(psi)));
  const Mat2 m = rotation_sigma2(phi);
  const V3 v2p = conjugate(dagger(m), v2);
  const V3 minus_y = {0.0, -1.0, 0.0};
  const Mat2 r1 = su2_between(minus_y, v1), r2 = su2_between(minus_y, v2p);
  const Mat2 cp = standard_coin(f_plus(delta_theta)), cm = standard_coin(f_minus(delta_theta));
  CurvedCoins c;
  c.first_even = cp * r1;
  c.second_even = m * dagger(r1) * cm;
  c.first_odd = cp * r2;
  c.second_odd = dagger(m) * dagger(r2) * cm;
  return c;
}

Mat2 curved_frame_1p2(const TriadValue& t, double headroom) {
  const double nx = std::hypot(t.e1, t.b) / headroom;
  const double beta = std::atan2(t.b, t.e1);
  const double phi = std::acos(std::min(nx, 1.0));
  // SU(2) lift of R_y(phi) R_x(-beta): exp(-i phi sigma_2 / 2) exp(i beta sigma_1 / 2).
  return rotation_sigma2(-0.5 * phi) * standard_coin(0.5 * beta);
}

CurvedCoinField curved_coin_field(const Triad& triad, int slice, double delta_theta, double headroom) {
  const Lattice& lat = triad.lattice();
  CurvedCoinField f;
  f.first_even.resize(lat.sites());
  f.second_even.resize(lat.sites());
  f.first_odd.resize(lat.sites());
  f.second_odd.resize(lat.sites());
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    const CurvedCoins c = curved_coins_1p2({triad.e1(slice, s), triad.e2(slice, s), triad.b(slice, s)}, delta_theta, headroom);
    f.first_even[s] = c.first_even;
    f.second_even[s] = c.second_even;
    f.first_odd[s] = c.first_odd;
    f.second_odd[s] = c.second_odd;
  }
  return f;
}

SpinorField curved_step_1p2(const SpinorField& psi, const CurvedCoinField& coins, int j) {
  const Lattice& lat = psi.lattice();
  if (lat.dims() != 2 || psi.internal_dim() != 2) throw ShapeError("curved (1+2)D walk needs a 2D two-component field");
  if (coins.first_even.size() != lat.sites()) throw ShapeError("coin field size mismatch");
  const bool even = j % 2 == 0;
  return step(step(psi, even ? coins.first_even : coins.first_odd, 0), even ? coins.second_even : coins.second_odd, 1);
}

SpinorField curved_step_1p2(const SpinorField& psi, const Triad& triad, double delta_theta, int j, double headroom) {
  const Lattice& lat = psi.lattice();
  if (lat.dims() != 2 || psi.internal_dim() != 2) throw ShapeError("curved (1+2)D walk needs a 2D two-component field");
  if (triad.lattice() != lat) throw ShapeError("triad lattice mismatch");
  const int slice = triad.times() == 1 ? 0 : j;
  return curved_step_1p2(psi, curved_coin_field(triad, slice, delta_theta, headroom), j);
}

Mat2 curved_two_step_fourier(double k1, double k2, const CurvedCoins& c) {
  const Mat2 even = c.second_even * phase_shift(k2) * c.first_even * phase_shift(k1);
  const Mat2 odd = c.second_odd * phase_shift(k2) * c.first_odd * phase_shift(k1);
  return odd * even;
}

namespace {

SpinorField weight(const SpinorField& f, const MetricField2D& g, int j, double power) {
  if (f.lattice() != g.lattice()) throw ShapeError("metric lattice mismatch");
  const int slice = g.times() == 1 ? 0 : j;
  SpinorField out = f;
  for (std::size_t s = 0; s < f.lattice().sites(); ++s) {
    const double det = g.gxx(slice, s) * g.gyy(slice, s) - g.gxy(slice, s) * g.gxy(slice, s);
    const double w = std::pow(det, power);
    for (int c = 0; c < f.internal_dim(); ++c) out.at(s, c) *= w;
  }
  return out;
}

}  // namespace

SpinorField density_weight(const SpinorField& phi, const MetricField2D& g, int j) { return weight(phi, g, j, 0.25); }
SpinorField density_unweight(const SpinorField& psi, const MetricField2D& g, int j) { return weight(psi, g, j, -0.25); }

}  // namespace qw
