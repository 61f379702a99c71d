#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "qwalk/core/coin.hpp"
#include "qwalk/core/convention.hpp"
#include "qwalk/core/evolve.hpp"
#include "qwalk/core/fourier.hpp"
#include "qwalk/core/unitary.hpp"

using namespace qw;

namespace {

Eigen::Matrix2cd to_eigen(const Mat2& m) {
  Eigen::Matrix2cd e;
  e << m.a, m.b, m.c, m.d;
  return e;
}

Eigen::Matrix2cd sigma(int i) {
  Eigen::Matrix2cd s;
  const cplx I{0.0, 1.0};
  if (i == 1) s << 0, 1, 1, 0;
  if (i == 2) s << 0, -I, I, 0;
  if (i == 3) s << 1, 0, 0, -1;
  return s;
}

double diff(const Mat2& m, const Eigen::Matrix2cd& e) { return (to_eigen(m) - e).cwiseAbs().maxCoeff(); }

SpinorField random_field(const Lattice& lat, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  SpinorField f(lat, 2);
  for (auto& z : f.amplitudes()) z = {nd(rng), nd(rng)};
  f.normalize();
  return f;
}

}  // namespace

TEST_CASE("lattice indexing wraps periodically") {
  const Lattice l = Lattice::square(8, 4);
  CHECK(l.sites() == 32);
  CHECK(l.stride(0) == 1);
  CHECK(l.stride(1) == 8);
  CHECK(l.index(-1, 0) == 7);
  CHECK(l.index(0, 4) == 0);
  CHECK(l.index(9, -1) == l.index(1, 3));
  const std::size_t s = l.index(3, 2);
  CHECK(l.coord(s, 0) == 3);
  CHECK(l.coord(s, 1) == 2);
  CHECK(l.neighbour(s, 0, 5) == l.index(0, 2));
  CHECK(l.neighbour(s, 1, -3) == l.index(3, 3));
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(96));
}

TEST_CASE("coins match matrix exponentials of Pauli matrices") {
  const cplx I{0.0, 1.0};
  for (double t : {-1.3, 0.0, 0.4, 2.9}) {
    CHECK(diff(standard_coin(t), (I * t * sigma(1)).exp()) < 1e-14);
    CHECK(diff(phase_shift(t), (I * t * sigma(3)).exp()) < 1e-14);
    CHECK(diff(rotation_sigma2(t), (I * t * sigma(2)).exp()) < 1e-14);
  }
}

TEST_CASE("Euler coin is unitary and canonicalization preserves the matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const CoinAngles q{u(rng), u(rng), u(rng), u(rng)};
    const Mat2 m = build_coin_euler(q);
    CHECK(unitarity_defect(m) < 1e-13);
    const CoinAngles c = canonicalize(q);
    CHECK(c.theta >= 0.0);
    CHECK(c.theta <= 0.5 * pi + 1e-15);
    CHECK(max_abs_diff(build_coin_euler(c), m) < 1e-12);
    CHECK(max_abs_diff(build_coin_euler(euler_angles(m)), m) < 1e-12);
  }
  // degenerate angles pin the free phase
  CHECK(canonicalize({0.0, 0.0, 1.0, 2.0}).zeta == 0.0);
  CHECK(canonicalize({0.0, 0.5 * pi, 1.0, 2.0}).xi == 0.0);
}

TEST_CASE("U(N) factorization") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int n : {1, 2, 3, 5}) {
    Eigen::MatrixXcd h(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) h(i, k) = {nd(rng), nd(rng)};
    h = 0.5 * (h + h.adjoint()).eval();
    const Eigen::MatrixXcd u = expi_hermitian(h);
    // independent oracle for the exponential
    const Eigen::MatrixXcd ref = (cplx{0.0, 1.0} * h).exp();
    CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-12);
    const FactorizedUnitary f = factor_unitary(u);
    CHECK(std::abs(f.special.determinant() - 1.0) < 1e-12);
    CHECK((std::exp(cplx{0.0, f.global_phase / n}) * f.special - u).cwiseAbs().maxCoeff() < 1e-12);
  }
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2) * 1.1;
  CHECK_THROWS_AS(factor_unitary(bad), std::invalid_argument);
}

TEST_CASE("spin-dependent shift moves up left and down right") {
  const Lattice l = Lattice::line(8);
  SpinorField f(l, 2);
  f.at(3, 0) = 1.0;
  f.at(3, 1) = 2.0;
  const SpinorField g = shift(f, 0, +1);
  CHECK(g.at(2, 0) == cplx{1.0, 0.0});
  CHECK(g.at(4, 1) == cplx{2.0, 0.0});
  CHECK(max_abs_diff(shift(g, 0, -1), f) == 0.0);
  // wrap-around
  SpinorField h(l, 2);
  h.at(0, 0) = 1.0;
  CHECK(shift(h, 0, +1).at(7, 0) == cplx{1.0, 0.0});
}

TEST_CASE("plane waves evolve with the Fourier-space walk operator") {
  const int n = 64;
  const Lattice l = Lattice::line(n);
  const CoinAngles q{0.3, 0.7, -0.4, 1.1};
  for (int m : {0, 5, 31, 32, 50}) {
    const double k = 2.0 * pi * m / n;
    const cplx u0{0.6, 0.1}, d0{-0.2, 0.7};
    SpinorField f(l, 2);
    for (int p = 0; p < n; ++p) {
      const cplx e = std::exp(cplx{0.0, k * p});
      f.at(std::size_t(p), 0) = u0 * e;
      f.at(std::size_t(p), 1) = d0 * e;
    }
    const SpinorField g = step(f, build_coin_euler(q), 0);
    const Mat2 w = walk_operator_fourier(k, q);
    for (int p = 0; p < n; ++p) {
      const cplx e = std::exp(cplx{0.0, k * p});
      CHECK(std::abs(g.at(std::size_t(p), 0) - (w.a * u0 + w.b * d0) * e) < 1e-13);
      CHECK(std::abs(g.at(std::size_t(p), 1) - (w.c * u0 + w.d * d0) * e) < 1e-13);
    }
  }
}

TEST_CASE("dispersion closed form against eigenvalues") {
  // eigenphases of U F(k) with alpha = zeta = 0, through an independent eigensolver
  double worst = 0.0;
  for (int i = 0; i < 16; ++i)
    for (int k = 0; k < 16; ++k) {
      const double theta = pi * i / 16.0, kk = -pi + 2.0 * pi * k / 16.0, xi = 0.37;
      const Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(to_eigen(walk_operator_fourier(kk, {0.0, theta, xi, 0.0})));
      const Dispersion d = dispersion(theta, xi, kk);
      std::vector<double> ph{std::arg(es.eigenvalues()(0)), std::arg(es.eigenvalues()(1))};
      for (double e : {d.plus, d.minus}) {
        double best = 1e9;
        for (double p : ph) best = std::min(best, std::abs(std::remainder(e - p, 2.0 * pi)));
        worst = std::max(worst, best);
      }
    }
  CHECK(worst < 1e-12);
  // theta = 0 is pure transport: E = +-|k|
  CHECK(std::abs(dispersion(0.0, 0.0, 0.7).plus - 0.7) < 1e-15);
  CHECK(std::abs(dispersion(0.0, 0.0, -0.7).plus - 0.7) < 1e-15);
  // the pole maps to pi
  CHECK(std::abs(dispersion(0.0, 0.0, -pi).plus - pi) < 1e-15);
  CHECK(reduce_quasimomentum(pi) == doctest::Approx(-pi));
}

TEST_CASE("free walk conserves probability") {
  std::mt19937_64 rng(11);
  SpinorField f = random_field(Lattice::line(256), rng);
  const Mat2 u = build_coin_euler({0.1, 0.6, 0.2, -0.3});
  for (int j = 0; j < 1000; ++j) f = step(f, u, 0);
  CHECK(std::abs(f.norm2() - 1.0) < 1e-12);
}

TEST_CASE("step rejects mismatched coin fields") {
  const Lattice l = Lattice::line(8);
  SpinorField f(l, 2);
  CoinField c(5);
  CHECK_THROWS_AS(step(f, c, 0), ShapeError);
}

TEST_CASE("converted convention inverts the original evolution") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int dims = 1; dims <= 2; ++dims) {
    const Lattice l = dims == 1 ? Lattice::line(32) : Lattice::square(8, 8);
    CoinEvolution ev;
    for (int j = 0; j < 20; ++j)
      ev.push_back(coin_field(l, [&](std::size_t) { return build_coin_euler({u(rng), u(rng), u(rng), u(rng)}); }));
    const SpinorField psi = random_field(l, rng);
    const SpinorField fwd = evolve_shift_first(psi, ev, dims - 1);
    CHECK(max_abs_diff(fwd, psi) > 1e-3);
    CHECK(max_abs_diff(evolve_coin_first(fwd, convert_convention(ev), dims - 1), psi) < 1e-12);
  }
}
