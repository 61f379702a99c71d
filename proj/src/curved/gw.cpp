#include "qwalk/curved/gw.hpp"

#include <cmath>
#include <string>

#include "qwalk/core/fourier.hpp"

namespace qw {

std::array<double, 3> gw_metric(double xi, double profile, GwPolarization pol) {
  if (pol == GwPolarization::diagonal_traceless) return {-1.0 - xi * profile, -1.0 + xi * profile, 0.0};
  return {-1.0, -1.0, xi * profile};
}

std::pair<std::array<cplx, 2>, double> flat_positive_mode(double k1, double k2, double headroom) {
  const CurvedCoins c = curved_coins_1p2({1.0, 1.0, 0.0}, 0.0, headroom);
  const Mat2 w = curved_two_step_fourier(k1, k2, c);
  const auto ev = eigenvalues(w);
  // E = -arg(lambda); keep the larger one.
  const cplx lam = -std::arg(ev[0]) > -std::arg(ev[1]) ? ev[0] : ev[1];
  std::array<cplx, 2> v;
  const cplx r1a = w.b, r1b = lam - w.a;  // from the first row
  const cplx r2a = lam - w.d, r2b = w.c;  // from the second row
  if (std::abs(r1a) + std::abs(r1b) >= std::abs(r2a) + std::abs(r2b))
    v = {r1a, r1b};
  else
    v = {r2a, r2b};
  double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  if (n == 0.0) {
    v = {1.0, 0.0};
    n = 1.0;
  }
  // Phase convention: largest component real and positive.
  const cplx big = std::abs(v[0]) >= std::abs(v[1]) ? v[0] : v[1];
  const cplx ph = std::conj(big) / std::abs(big);
  v[0] *= ph / n;
  v[1] *= ph / n;
  return {v, -std::arg(lam)};
}

SpinorField gw_two_mode_state(double k, const Lattice& lat, double headroom) {
  if (lat.dims() != 2) throw ShapeError("two-mode state needs a 2D lattice");
  for (int a = 0; a < 2; ++a) {
    const double m = k * lat.extent(a) / (2.0 * pi);
    if (std::abs(m - std::round(m)) > 1e-9)
      throw std::invalid_argument("k = " + std::to_string(k) + " is not a multiple of 2 pi / " + std::to_string(lat.extent(a)));
  }
  const auto [v1, e1] = flat_positive_mode(k, 0.0, headroom);
  const auto [v2, e2] = flat_positive_mode(0.0, k, headroom);
  if (std::abs(e1 - e2) > 1e-10) throw std::runtime_error("two-mode energies do not match");
  SpinorField f(lat, 2);
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    const double a1 = k * lat.coord(s, 0), a2 = k * lat.coord(s, 1);
    const cplx p1{std::cos(a1), std::sin(a1)}, p2{std::cos(a2), std::sin(a2)};
    for (int c = 0; c < 2; ++c) f.at(s, c) = v1[static_cast<std::size_t>(c)] * p1 + v2[static_cast<std::size_t>(c)] * p2;
  }
  f.normalize();
  return f;
}

GwChange gw_relative_density_change(const SpinorField& state, double xi, double profile, GwPolarization pol,
                                    double headroom) {
  if (std::abs(xi) > 0.05) throw std::invalid_argument("perturbation amplitude |xi| must not exceed 0.05");
  const Lattice& lat = state.lattice();
  const auto g = gw_metric(xi, profile, pol);
  const TriadValue tv = triad_at(g[0], g[1], g[2]);
  Triad t(lat, 1);
  t.e1.values().assign(lat.sites(), tv.e1);
  t.e2.values().assign(lat.sites(), tv.e2);
  t.b.values().assign(lat.sites(), tv.b);
  SpinorField psi = curved_step_1p2(state, t, 0.0, 0, headroom);
  psi = curved_step_1p2(psi, t, 0.0, 1, headroom);
  const auto before = state.density();
  const auto after = psi.density();
  GwChange r;
  r.relative.resize(before.size());
  for (std::size_t s = 0; s < before.size(); ++s) {
    r.relative[s] = (after[s] - before[s]) / before[s];
    r.max_abs = std::max(r.max_abs, std::abs(r.relative[s]));
  }
  return r;
}

}  // namespace qw
