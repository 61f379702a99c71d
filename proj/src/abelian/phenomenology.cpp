#include "qwalk/abelian/phenomenology.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "qwalk/abelian/electric.hpp"
#include "qwalk/abelian/em2d.hpp"

namespace qw {

namespace {

double periodic_offset(double p, double c, int n) {
  double d = std::fmod(p - c, static_cast<double>(n));
  if (d < -0.5 * n) d += n;
  if (d >= 0.5 * n) d -= n;
  return d;
}

}  // namespace

SpinorField gaussian_packet(const Lattice& lat, const Packet& p) {
  SpinorField f(lat, 2);
  const double nrm = std::sqrt(std::norm(p.up) + std::norm(p.down));
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    const double x0 = lat.coord(s, 0);
    const double d0 = periodic_offset(x0, p.center0, lat.extent(0));
    double r2 = d0 * d0, phase = p.k0 * x0;
    if (lat.dims() == 2) {
      const double x1 = lat.coord(s, 1);
      const double d1 = periodic_offset(x1, p.center1, lat.extent(1));
      r2 += d1 * d1;
      phase += p.k1 * x1;
    }
    const cplx g = std::exp(-r2 / (2.0 * p.width * p.width)) * cplx{std::cos(phase), std::sin(phase)};
    f.at(s, 0) = g * p.up / nrm;
    f.at(s, 1) = g * p.down / nrm;
  }
  f.normalize();
  return f;
}

std::array<double, 2> mean_position(const SpinorField& psi) {
  const Lattice& lat = psi.lattice();
  const auto rho = psi.density();
  std::array<double, 2> out{0.0, 0.0};
  for (int axis = 0; axis < lat.dims(); ++axis) {
    const int n = lat.extent(axis);
    std::vector<double> c(rho.size()), s(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const double a = 2.0 * pi * lat.coord(i, axis) / n;
      c[i] = rho[i] * std::cos(a);
      s[i] = rho[i] * std::sin(a);
    }
    double ang = std::atan2(pairwise_sum(s), pairwise_sum(c));
    if (ang < 0.0) ang += 2.0 * pi;
    out[static_cast<std::size_t>(axis)] = ang * n / (2.0 * pi);
  }
  return out;
}

void unwrap(std::vector<double>& x, double extent) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    while (x[i] - x[i - 1] > 0.5 * extent) x[i] -= extent;
    while (x[i] - x[i - 1] < -0.5 * extent) x[i] += extent;
  }
}

double participation_ratio(const SpinorField& psi) {
  auto rho = psi.density();
  const double total = pairwise_sum(rho);
  for (double& r : rho) r = (r / total) * (r / total);
  return 1.0 / pairwise_sum(rho);
}

double dominant_period(const std::vector<double>& x, double min_period, double max_period) {
  const std::size_t n = x.size();
  // Variance explained by the least-squares fit c + a cos(wt) + b sin(wt); unlike the raw
  // periodogram this has no leakage bias for a clean sinusoid.
  auto power = [&](double period) {
    const double w = 2.0 * pi / period;
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    Eigen::Vector3d r = Eigen::Vector3d::Zero();
    for (std::size_t t = 0; t < n; ++t) {
      const Eigen::Vector3d basis(1.0, std::cos(w * static_cast<double>(t)), std::sin(w * static_cast<double>(t)));
      m += basis * basis.transpose();
      r += basis * x[t];
    }
    return r.dot(m.ldlt().solve(r));
  };
  // Scan in frequency, uniform steps of a tenth of the Fourier resolution, then golden-section refine.
  const double fmin = 1.0 / max_period, fmax = 1.0 / min_period;
  const double df = 0.1 / static_cast<double>(n);
  double best_f = fmin, best_p = -1.0;
  for (double f = fmin; f <= fmax; f += df) {
    const double p = power(1.0 / f);
    if (p > best_p) {
      best_p = p;
      best_f = f;
    }
  }
  double a = std::max(fmin, best_f - df), b = std::min(fmax, best_f + df);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 60; ++it) {
    const double c1 = b - g * (b - a), c2 = a + g * (b - a);
    if (power(1.0 / c1) > power(1.0 / c2))
      b = c2;
    else
      a = c1;
  }
  return 2.0 / (a + b);
}

double linear_slope(const std::vector<double>& y) {
  const double n = static_cast<double>(y.size());
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const double tt = static_cast<double>(t);
    st += tt;
    sy += y[t];
    stt += tt * tt;
    sty += tt * y[t];
  }
  return (n * sty - st * sy) / (n * stt - st * st);
}

BlochResult bloch_oscillation(const BlochConfig& c) {
  const Lattice lat = Lattice::line(c.sites);
  // Upper eigenvector of C(-mass) at k = 0 is (1, 1) / sqrt 2.
  Packet pk;
  pk.center0 = c.sites / 2;
  pk.width = c.width;
  pk.up = pk.down = cplx{1.0, 0.0};
  SpinorField psi = gaussian_packet(lat, pk);
  const Mat2 coin = standard_coin(-c.mass);
  BlochResult r;
  r.expected_period = 2.0 * pi / c.field;
  SpinorField next(lat, 2);
  CoinField coins(lat.sites());
  for (int j = 0; j <= c.steps; ++j) {
    r.mean_x.push_back(mean_position(psi)[0]);
    if (j == c.steps) break;
    // eps A1 = -field * j, so Delta xi = field * j, uniform in space
    const Mat2 u = coin * phase_shift(c.field * j);
    step_into(psi, next, std::span<const Mat2>(&u, 1), 0);
    std::swap(psi, next);
  }
  unwrap(r.mean_x, c.sites);
  r.period = dominant_period(r.mean_x, 4.0, 0.5 * c.steps);
  return r;
}

DriftResult exb_drift(const DriftConfig& c) {
  const Lattice lat = Lattice::square(c.sites, c.sites);
  DriftResult r;
  r.B = 2.0 * pi * c.flux_quanta / c.sites;
  r.E = c.e_over_b * r.B;
  r.expected = c.e_over_b;
  Packet pk;
  pk.center0 = pk.center1 = c.sites / 2;
  pk.width = c.width;
  SpinorField psi = gaussian_packet(lat, pk);
  Em2dCoins coins;
  coins.first.resize(lat.sites());
  coins.second.resize(lat.sites());
  const Mat2 cp = standard_coin(f_plus(c.delta_theta)), cm = standard_coin(f_minus(c.delta_theta));
  for (std::size_t s = 0; s < lat.sites(); ++s) coins.second[s] = cm * phase_shift(r.B * lat.coord(s, 0));
  for (int j = 0; j <= c.steps; ++j) {
    const auto m = mean_position(psi);
    r.x.push_back(m[0]);
    r.y.push_back(m[1]);
    if (j == c.steps) break;
    const Mat2 first = cp * phase_shift(r.E * j);
    coins.first.assign(lat.sites(), first);
    psi = em_step_2d(psi, coins);
  }
  unwrap(r.x, c.sites);
  unwrap(r.y, c.sites);
  r.vx = linear_slope(r.x);
  r.vy = linear_slope(r.y);
  r.speed = std::hypot(r.vx, r.vy);
  return r;
}

double flux_spreading(const FluxConfig& c) {
  const Lattice lat = Lattice::square(c.sites, c.sites);
  Packet pk;
  pk.center0 = pk.center1 = c.sites / 2;
  pk.width = c.width;
  SpinorField psi = gaussian_packet(lat, pk);
  psi.at(lat.index(c.sites / 2, c.sites / 2), 0) += c.perturbation;
  Em2dCoins coins;
  const Mat2 cp = standard_coin(f_plus(0.0)), cm = standard_coin(f_minus(0.0));
  coins.first.assign(1, cp);
  coins.second.resize(lat.sites());
  const double b = 2.0 * pi * c.flux;
  for (std::size_t s = 0; s < lat.sites(); ++s) coins.second[s] = cm * phase_shift(b * (lat.coord(s, 0) - c.sites / 2));
  for (int j = 0; j < c.steps; ++j) psi = em_step_2d(psi, coins);
  return participation_ratio(psi);
}

}  // namespace qw
