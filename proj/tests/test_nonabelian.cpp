#include <cmath>
#include <random>

#include "doctest.h"
#include "qwalk/abelian/current.hpp"
#include "qwalk/abelian/electric.hpp"
#include "qwalk/nonabelian/field_strength.hpp"
#include "qwalk/nonabelian/step.hpp"

using namespace qw;
using Eigen::MatrixXcd;

namespace {

SpinorField random_field(const Lattice& lat, int internal, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  SpinorField f(lat, internal);
  for (auto& z : f.amplitudes()) z = {nd(rng), nd(rng)};
  f.normalize();
  return f;
}

NonAbelianGaugeField random_field_b(const Lattice& l, int times, int n, double eps, std::mt19937_64& rng) {
  NonAbelianGaugeField g(l, times, n, eps);
  for (int j = 0; j < times; ++j)
    for (std::size_t p = 0; p < l.sites(); ++p) {
      g.b0(j, p) = random_hermitian(n, 1.0, rng);
      g.b1(j, p) = random_hermitian(n, 1.0, rng);
    }
  return g;
}

GaugeGroupField random_group(const Lattice& l, int times, int n, std::mt19937_64& rng) {
  GaugeGroupField g(l, times, n);
  for (int j = 0; j < times; ++j)
    for (std::size_t p = 0; p < l.sites(); ++p) g(j, p) = random_unitary(n, rng);
  return g;
}

double max_diff(const std::vector<MatrixXcd>& a, const std::vector<MatrixXcd>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return r;
}

}  // namespace

TEST_CASE("random group elements are unitary") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 3, 4}) {
    const MatrixXcd u = random_unitary(n, rng);
    CHECK((u.adjoint() * u - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
    const MatrixXcd h = random_hermitian(n, 1.0, rng);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("non-Hermitian potentials are rejected") {
  NonAbelianGaugeField g(Lattice::line(4), 1, 2, 1.0);
  g.b0(0, 1)(0, 1) = cplx{0.3, 0.1};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("walk is gauge covariant and the link square closes") {
  std::mt19937_64 rng(17);
  const Lattice l = Lattice::line(16);
  for (int n : {1, 2, 3}) {
    const int steps = 20;
    const NonAbelianGaugeField g = random_field_b(l, steps, n, 1.0, rng);
    const GaugeGroupField G = random_group(l, steps + 1, n, rng);
    SpinorField psi = random_field(l, 2 * n, rng);
    SpinorField psip = gauge_rotate(psi, G, 0);
    double worst = 0.0;
    for (int j = 0; j < steps; ++j) {
      const GroupLinkPair links = link_exponentials(g, j);
      psi = nonabelian_step(psi, links, 0.4);
      psip = nonabelian_step(psip, gauge_transform_links(links, G, j), 0.4);
      worst = std::max(worst, max_abs_diff(gauge_rotate(psi, G, j + 1), psip));
    }
    CAPTURE(n);
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("transformed links follow G U G^-1 with neighbouring sites") {
  std::mt19937_64 rng(4);
  const Lattice l = Lattice::line(6);
  const NonAbelianGaugeField g = random_field_b(l, 1, 2, 1.0, rng);
  const GaugeGroupField G = random_group(l, 2, 2, rng);
  const GroupLinkPair u = link_exponentials(g, 0);
  const GroupLinkPair v = gauge_transform_links(u, G, 0);
  for (long p = 0; p < 6; ++p) {
    const auto s = static_cast<std::size_t>(p);
    CHECK((v.plus[s] - G.at(1, p) * u.plus[s] * G.at(0, p + 1).adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((v.minus[s] - G.at(1, p) * u.minus[s] * G.at(0, p - 1).adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("lattice field strength is covariant") {
  std::mt19937_64 rng(23);
  const Lattice l = Lattice::line(12);
  for (int n : {1, 2, 3}) {
    const NonAbelianGaugeField g = random_field_b(l, 2, n, 1.0, rng);
    const GaugeGroupField G = random_group(l, 3, n, rng);
    const GroupLinkPair a = link_exponentials(g, 0), b = link_exponentials(g, 1);
    const auto f = lattice_field_strength_covariant(a, b);
    const auto fp = lattice_field_strength_covariant(gauge_transform_links(a, G, 0), gauge_transform_links(b, G, 1));
    std::vector<MatrixXcd> expected;
    for (std::size_t p = 0; p < l.sites(); ++p) expected.push_back(G(2, p) * f[p] * G(2, p).adjoint());
    CAPTURE(n);
    CHECK(max_diff(fp, expected) < 1e-11);
  }
}

TEST_CASE("pure-gauge links have unit holonomy") {
  std::mt19937_64 rng(8);
  const Lattice l = Lattice::line(10);
  const int n = 3;
  const GaugeGroupField G = random_group(l, 3, n, rng);
  auto pure = [&](int j) {
    GroupLinkPair u;
    for (long p = 0; p < 10; ++p) {
      u.plus.push_back(G.at(j + 1, p) * G.at(j, p + 1).adjoint());
      u.minus.push_back(G.at(j + 1, p) * G.at(j, p - 1).adjoint());
    }
    return u;
  };
  const auto f = lattice_field_strength_covariant(pure(0), pure(1));
  std::vector<MatrixXcd> one(10, MatrixXcd::Identity(n, n));
  CHECK(max_diff(f, one) < 1e-13);
}

TEST_CASE("field strength extraction: uniform electric field and the commutator term") {
  const Lattice l = Lattice::line(4);
  {
    const double eps = 1e-2, E = 0.8;
    NonAbelianGaugeField g(l, 2, 1, eps);
    g.b0.set_zero();
    g.b1.set_zero();
    for (int j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 4; ++p) g.b1(j, p)(0, 0) = eps * E * (j * eps);
    const auto f = lattice_field_strength_covariant(link_exponentials(g, 0), link_exponentials(g, 1));
    const MatrixXcd x = extract_field_strength(f[0], eps);
    CHECK(std::abs(x(0, 0) - cplx{-E, 0.0}) < 1e-3);
  }
  {
    // constant links: the plaquette reduces to a group commutator, accurate to O(eps)
    std::mt19937_64 rng(3);
    const MatrixXcd B0 = random_hermitian(2, 1.0, rng), B1 = random_hermitian(2, 1.0, rng);
    const MatrixXcd expected = cplx{0.0, -1.0} * (B0 * B1 - B1 * B0);
    auto error = [&](double eps) {
      NonAbelianGaugeField g(l, 2, 2, eps);
      for (int j = 0; j < 2; ++j)
        for (std::size_t p = 0; p < 4; ++p) {
          g.b0(j, p) = eps * B0;
          g.b1(j, p) = -eps * B1;
        }
      const auto f = lattice_field_strength_covariant(link_exponentials(g, 0), link_exponentials(g, 1));
      return (extract_field_strength(f[2], eps) - expected).cwiseAbs().maxCoeff();
    };
    const double e3 = error(1e-3), e4 = error(1e-4);
    CHECK(e4 < 2e-3);
    CHECK(e3 / e4 == doctest::Approx(10.0).epsilon(0.05));
  }
}

TEST_CASE("N = 1 reduces to the Abelian electric walk") {
  std::mt19937_64 rng(31);
  const Lattice l = Lattice::line(32);
  const double eps = 0.2, dtheta = -0.15;
  const int steps = 30;
  const NonAbelianGaugeField g = random_field_b(l, steps, 1, eps, rng);
  AbelianGaugeField a(l, steps, eps);
  for (int j = 0; j < steps; ++j)
    for (std::size_t p = 0; p < l.sites(); ++p) {
      a[0](j, p) = g.b0(j, p)(0, 0).real() / eps;
      a[1](j, p) = -g.b1(j, p)(0, 0).real() / eps;
    }
  SpinorField x = random_field(l, 2, rng), y = x;
  for (int j = 0; j < steps; ++j) {
    x = nonabelian_step(x, link_exponentials(g, j), dtheta);
    y = electric_step_1d(y, a, -dtheta / eps, eps, j);
  }
  CHECK(max_abs_diff(x, y) < 1e-13);
}

TEST_CASE("random SU(2) field conserves probability") {
  std::mt19937_64 rng(12);
  const Lattice l = Lattice::line(64);
  const NonAbelianGaugeField g = random_field_b(l, 100, 2, 1.0, rng);
  SpinorField psi = random_field(l, 4, rng);
  for (int j = 0; j < 100; ++j) psi = nonabelian_step(psi, link_exponentials(g, j), 0.3);
  CHECK(std::abs(psi.norm2() - 1.0) < 1e-11);
}

TEST_CASE("colour-summed current reads the spin-major layout") {
  std::mt19937_64 rng(13);
  const Lattice l = Lattice::line(16);
  const SpinorField psi = random_field(l, 6, rng);
  const CurrentSlice c = lattice_current_1d(psi);
  for (std::size_t p = 0; p < 16; ++p) {
    double up = 0.0, down = 0.0;
    for (int a = 0; a < 3; ++a) {
      up += std::norm(psi.at(p, a));
      down += std::norm(psi.at(p, 3 + a));
    }
    CHECK(c.j0[p] == doctest::Approx(up + down).epsilon(1e-14));
    CHECK(c.j1[p] == doctest::Approx(down - up).epsilon(1e-14));
  }
  const NonAbelianGaugeField g = random_field_b(l, 1, 3, 1.0, rng);
  const SpinorField next = nonabelian_step(psi, link_exponentials(g, 0), 0.3);
  CHECK(std::isfinite(continuity_residual_1d(psi, next, 1.0)));
  CHECK_THROWS_AS(lattice_current_1d(SpinorField(l, 3)), ShapeError);
}

TEST_CASE("one step matches the continuum equation to second order") {
  // d_t psi = sigma_3 d_x psi + i (B0 + sigma_3 B1) psi - i m sigma_1 psi, B = b / eps
  const int n = 2;
  std::mt19937_64 rng(5);
  const MatrixXcd M0 = random_hermitian(n, 0.5, rng), M1 = random_hermitian(n, 0.5, rng), M2 = random_hermitian(n, 0.5, rng);
  const double m = 0.7;
  auto B0 = [&](double x) { MatrixXcd r = std::cos(x) * M0 + M2; return r; };
  auto B1 = [&](double x) { MatrixXcd r = std::sin(x) * M1; return r; };
  auto up = [](double x, int a) { return (1.0 + 0.3 * a) * std::exp(cplx{0.0, std::sin(x) + a * std::cos(x)}); };
  auto dn = [](double x, int a) { return (0.5 - 0.2 * a) * std::exp(cplx{0.0, std::cos(2 * x) + a * x}); };
  auto dup = [&](double x, int a) { return up(x, a) * cplx{0.0, std::cos(x) - a * std::sin(x)}; };
  auto ddn = [&](double x, int a) { return dn(x, a) * cplx{0.0, -2 * std::sin(2 * x) + a}; };
  auto residual = [&](int sites) {
    const double eps = 2 * pi / sites;
    const Lattice l = Lattice::line(sites);
    NonAbelianGaugeField g(l, 1, n, eps);
    SpinorField psi(l, 2 * n);
    for (int p = 0; p < sites; ++p) {
      const double x = p * eps;
      const auto s = static_cast<std::size_t>(p);
      g.b0(0, s) = eps * B0(x);
      g.b1(0, s) = eps * B1(x);
      for (int a = 0; a < n; ++a) {
        psi.at(s, a) = up(x, a);
        psi.at(s, n + a) = dn(x, a);
      }
    }
    const SpinorField next = nonabelian_step(psi, link_exponentials(g, 0), -eps * m);
    double r = 0.0;
    const cplx I{0.0, 1.0};
    for (int p = 0; p < sites; ++p) {
      const double x = p * eps;
      const auto s = static_cast<std::size_t>(p);
      Eigen::VectorXcd u(n), d(n), du(n), dd(n);
      for (int a = 0; a < n; ++a) {
        u(a) = up(x, a);
        d(a) = dn(x, a);
        du(a) = dup(x, a);
        dd(a) = ddn(x, a);
      }
      const Eigen::VectorXcd rhs_u = du + I * (B0(x) + B1(x)) * u - I * m * d;
      const Eigen::VectorXcd rhs_d = -dd + I * (B0(x) - B1(x)) * d - I * m * u;
      for (int a = 0; a < n; ++a) {
        r = std::max(r, std::abs(next.at(s, a) - u(a) - eps * rhs_u(a)));
        r = std::max(r, std::abs(next.at(s, n + a) - d(a) - eps * rhs_d(a)));
      }
    }
    return r;
  };
  const double r1 = residual(128), r2 = residual(256);
  CAPTURE(r1);
  CAPTURE(r2);
  CHECK(r1 / r2 >= 3.5);
}
