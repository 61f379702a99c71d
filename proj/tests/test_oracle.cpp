#include <cmath>

#include "doctest.h"
#include "qwalk/oracle/convergence.hpp"

using namespace qw;

namespace {

SpinorField sample(int n, double dx, const std::function<std::array<cplx, 2>(double)>& f) {
  SpinorField s(Lattice::line(n), 2);
  for (int p = 0; p < n; ++p) {
    const auto v = f(p * dx);
    s.at(std::size_t(p), 0) = v[0];
    s.at(std::size_t(p), 1) = v[1];
  }
  return s;
}

}  // namespace

TEST_CASE("plane waves solve the Dirac equation") {
  for (int branch : {+1, -1})
    for (double k : {-2.0, 0.0, 0.7}) {
      const PlaneWaveSolution w = plane_wave(0.9, k, branch, 0.3, -0.4);
      CHECK(std::abs(w.energy - 0.3 - branch * std::hypot(k + 0.4, 0.9)) < 1e-14);
      CHECK(std::norm(w.up) + std::norm(w.down) == doctest::Approx(1.0));
      for (double x : {0.0, 1.3, -4.0})
        for (double t : {0.0, 0.5, 3.0}) CHECK(dirac_residual(w, x, t) < 1e-12);
    }
}

TEST_CASE("massless free evolution translates chiral components at speed -+1") {
  const int n = 256;
  const double dx = 0.0625, L = n * dx, T = 2.0;
  auto bump = [L](double x) { return std::exp(-std::pow(x - 0.5 * L, 2)); };
  const SpinorField f = sample(n, dx, [&](double x) { return std::array<cplx, 2>{bump(x), 0.5 * bump(x)}; });
  const SpinorField g = dirac_evolve_spectral(f, dx, 0.0, {}, T);
  // T is a whole number of grid spacings, so the shift is exact on the samples
  const int shift = static_cast<int>(std::lround(T / dx));
  double err = 0.0;
  for (int p = 0; p < n; ++p) {
    err = std::max(err, std::abs(g.at(std::size_t(p), 0) - f.at(std::size_t((p + shift) % n), 0)));
    err = std::max(err, std::abs(g.at(std::size_t(p), 1) - f.at(std::size_t((p - shift + n) % n), 1)));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("massive plane wave rotates its phase at the symbol eigenvalue") {
  const int n = 64;
  const double dx = 0.1, L = n * dx, m = 1.3;
  const double k = 2 * pi * 3 / L;
  const PlaneWaveSolution w = plane_wave(m, k, +1);
  CHECK(w.energy == doctest::Approx(std::sqrt(k * k + m * m)));
  const SpinorField f = sample(n, dx, [&](double x) { return w(x, 0.0); });
  const double T = 1.7;
  const SpinorField g = dirac_evolve_spectral(f, dx, m, {}, T);
  const SpinorField ref = sample(n, dx, [&](double x) { return w(x, T); });
  CHECK(max_abs_diff(g, ref) < 1e-12);
}

TEST_CASE("spectral evolution is unitary and reversible") {
  DiracWalkCase c;
  const SpinorField f = sample_initial(c, 1.0 / 16);
  const double n0 = f.norm2();
  UniformPotential a;
  a.a0 = 0.4;
  a.a1 = -0.3;
  const SpinorField g = dirac_evolve_spectral(f, 1.0 / 16, 0.8, a, 100.0);
  CHECK(std::abs(g.norm2() - n0) < 1e-13 * n0 * 10);
  CHECK(max_abs_diff(dirac_evolve_spectral(g, 1.0 / 16, 0.8, a, -100.0), f) < 1e-12);
  // time-dependent potential through the Magnus integrator
  c.e_field = 0.5;
  const UniformPotential p = case_potential(c);
  const SpinorField h = dirac_evolve_spectral(f, 1.0 / 16, 0.8, p, 1.0);
  CHECK(max_abs_diff(dirac_evolve_spectral(h, 1.0 / 16, 0.8, p, -1.0, 1.0), f) < 1e-12);
}

TEST_CASE("Magnus integrator agrees with the gauge-shifted exact solution") {
  // A1 = -E t on a single mode: the symbol is linear in t, refine the step and compare
  DiracWalkCase c;
  c.e_field = 0.9;
  const SpinorField f = sample_initial(c, 1.0 / 8);
  const auto p = case_potential(c);
  const SpinorField coarse = dirac_evolve_spectral(f, 1.0 / 8, 1.0, p, 1.0, 0.0, 1e-2);
  const SpinorField fine = dirac_evolve_spectral(f, 1.0 / 8, 1.0, p, 1.0, 0.0, 1e-4);
  CHECK(max_abs_diff(coarse, fine) < 1e-9);
}

TEST_CASE("space-dependent gauge fields are rejected") {
  AbelianGaugeField a(Lattice::line(8), 2, 0.5);
  a[0](1, 3) = 0.2;
  CHECK_THROWS_AS(uniform_potential(a), std::invalid_argument);
  AbelianGaugeField b(Lattice::line(8), 3, 0.5);
  for (std::size_t s = 0; s < 8; ++s) {
    b[1](1, s) = 1.0;
    b[1](2, s) = 2.0;
  }
  const UniformPotential u = uniform_potential(b);
  CHECK(u.A1(0.75) == doctest::Approx(1.5));
}

TEST_CASE("convergence fit bookkeeping") {
  const auto r = fit_order({0.1, 0.05, 0.025}, {0.2, 0.05, 0.0125});
  CHECK(r.order == doctest::Approx(2.0));
  CHECK(r.r2 == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_order({0.1, 0.05}, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(fit_order({0.1, 0.2, 0.05}, {1.0, 0.5, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(fit_order({0.1, 0.05, 0.02}, {1.0, 0.0, 0.2}), std::invalid_argument);
}

TEST_CASE("massless walk is exact transport") {
  DiracWalkCase c;
  for (double e : {1.0 / 32, 1.0 / 64, 1.0 / 128}) CHECK(walk_oracle_error(c, e) < 1e-12);
}

TEST_CASE("massive and constant-field walks converge at first order") {
  const std::vector<double> eps{1.0 / 32, 1.0 / 64, 1.0 / 128};
  DiracWalkCase c;
  c.mass = 1.0;
  const ConvergenceReport free = convergence_order(c, eps);
  CHECK(free.order >= 0.9);
  CHECK(free.errors[1] < free.errors[0]);
  CHECK(free.errors[2] < free.errors[1]);
  c.e_field = 1.0;
  c.a0 = 0.3;
  const ConvergenceReport field = convergence_order(c, eps);
  CHECK(field.order >= 0.9);
  CHECK(field.errors[2] < field.errors[1]);
  CHECK_THROWS_AS(convergence_order(c, {0.1, 0.05}), std::invalid_argument);
}
