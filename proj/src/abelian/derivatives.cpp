#include "qwalk/abelian/derivatives.hpp"

#include <cmath>

namespace qw {

std::vector<double> sym_average(const Lattice& lat, const std::vector<double>& q, int axis) {
  std::vector<double> r(q.size());
  for (std::size_t s = 0; s < r.size(); ++s)
    r[s] = 0.5 * (q[lat.neighbour(s, axis, 1)] + q[lat.neighbour(s, axis, -1)]);
  return r;
}

std::vector<double> half_difference(const Lattice& lat, const std::vector<double>& q, int axis) {
  std::vector<double> r(q.size());
  for (std::size_t s = 0; s < r.size(); ++s)
    r[s] = 0.5 * (q[lat.neighbour(s, axis, 1)] - q[lat.neighbour(s, axis, -1)]);
  return r;
}

namespace {

std::vector<double> slice(const NodeField& q, int j) {
  const std::size_t n = q.slice_size();
  auto first = q.values().begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * n);
  return {first, first + static_cast<std::ptrdiff_t>(n)};
}

void store(NodeField& q, int j, const std::vector<double>& v) {
  for (std::size_t s = 0; s < v.size(); ++s) q(j, s) = v[s];
}

// Spatial stencil of d_mu (mu >= 1) or the Sigma part of d0, applied to one slice.
std::vector<double> spatial_part(const Lattice& lat, const std::vector<double>& q, int mu) {
  const bool two_d = lat.dims() == 2;
  if (mu == 0) return two_d ? sym_average(lat, sym_average(lat, q, 0), 1) : sym_average(lat, q, 0);
  if (mu == 1) return half_difference(lat, q, 0);
  return half_difference(lat, sym_average(lat, q, 0), 1);
}

}  // namespace

NodeField lattice_derivative(const NodeField& q, int mu, double eps) {
  const Lattice& lat = q.lattice();
  if (mu < 0 || mu > lat.dims()) throw std::out_of_range("derivative index out of range");
  if (mu == 0) {
    if (q.times() < 2) throw ShapeError("time derivative needs two time slices");
    NodeField r(lat, q.times() - 1);
    for (int j = 0; j + 1 < q.times(); ++j) {
      auto avg = spatial_part(lat, slice(q, j), 0);
      for (std::size_t s = 0; s < avg.size(); ++s) r(j, s) = (q(j + 1, s) - avg[s]) / eps;
    }
    return r;
  }
  NodeField r(lat, q.times());
  for (int j = 0; j < q.times(); ++j) {
    auto d = spatial_part(lat, slice(q, j), mu);
    for (double& x : d) x /= eps;
    store(r, j, d);
  }
  return r;
}

FieldStrength lattice_field_strength(const AbelianGaugeField& a) {
  a.validate();
  if (a.times() < 2) throw ShapeError("field strength needs two time slices");
  const int n = a.components();
  const int t = a.times() - 1;
  std::vector<NodeField> d(static_cast<std::size_t>(n * n));  // d[mu * n + nu] = d_mu A_nu
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) d[static_cast<std::size_t>(mu * n + nu)] = lattice_derivative(a[nu], mu, a.eps);
  FieldStrength f;
  f.n = n;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      NodeField c(a.lattice(), t);
      if (mu != nu) {
        const NodeField& x = d[static_cast<std::size_t>(mu * n + nu)];
        const NodeField& y = d[static_cast<std::size_t>(nu * n + mu)];
        for (int j = 0; j < t; ++j)
          for (std::size_t s = 0; s < c.slice_size(); ++s) c(j, s) = x(j, s) - y(j, s);
      }
      f.c.push_back(std::move(c));
    }
  return f;
}

SpinorField gauge_transform_field(const SpinorField& psi, const GaugePhase& phi, int j) {
  if (psi.lattice() != phi.lattice()) throw ShapeError("gauge phase lattice mismatch");
  SpinorField out = psi;
  for (std::size_t s = 0; s < psi.lattice().sites(); ++s) {
    const double p = phi(j, s);
    const cplx ph{std::cos(p), -std::sin(p)};
    for (int c = 0; c < psi.internal_dim(); ++c) out.at(s, c) *= ph;
  }
  return out;
}

AbelianGaugeField gauge_transform_potential(const AbelianGaugeField& a, const GaugePhase& phi) {
  a.validate();
  if (phi.lattice() != a.lattice()) throw ShapeError("gauge phase lattice mismatch");
  if (phi.times() != a.times() + 1) throw ShapeError("gauge phase needs times() + 1 slices");
  AbelianGaugeField out = a;
  for (int mu = 0; mu < a.components(); ++mu) {
    const NodeField d = lattice_derivative(phi, mu, a.eps);
    for (int j = 0; j < a.times(); ++j)
      for (std::size_t s = 0; s < phi.slice_size(); ++s) out[mu](j, s) -= d(j, s);
  }
  return out;
}

}  // namespace qw
