#include <cmath>

#include "doctest.h"
#include "qwalk/measured/aharonov.hpp"

using namespace qw;

namespace {

ExtKet delta(int sites, int at) {
  ExtKet v(std::size_t(sites), 0.0);
  v[std::size_t(at)] = 1.0;
  return v;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

AharonovConfig coined() {
  AharonovConfig c;
  c.c_plus = cplx{0.6, 0.0};
  c.c_minus = cplx{0.0, 0.8};
  c.alpha = std::polar(std::cos(0.7), 0.3);
  c.beta = std::polar(std::sin(0.7), -1.1);
  c.omega = 0.4;
  return c;
}

}  // namespace

TEST_CASE("coinless outcome shifts the packet rigidly") {
  AharonovConfig c;
  c.c_plus = std::sqrt(0.3);
  c.c_minus = std::sqrt(0.7);
  c.alpha = std::polar(1.0, 0.9);
  c.beta = 0.0;
  const ExtKet psi = gaussian_ext_ket(64, 20.0, 4.0, 0.3);
  const BranchResult plus = aharonov_step(psi, c, Outcome::plus);
  CHECK(plus.probability == doctest::Approx(0.3).epsilon(1e-12));
  for (int p = 0; p < 64; ++p) CHECK(std::abs(plus.ket[std::size_t(p)]) == doctest::Approx(std::abs(psi[std::size_t((p + 63) % 64)])).epsilon(1e-14));
  const BranchResult minus = aharonov_step(psi, c, Outcome::minus);
  for (int p = 0; p < 64; ++p) CHECK(std::abs(minus.ket[std::size_t(p)]) == doctest::Approx(std::abs(psi[std::size_t((p + 1) % 64)])).epsilon(1e-14));
}

TEST_CASE("deterministic single-direction transport") {
  AharonovConfig c;
  c.c_plus = 1.0;
  c.c_minus = 0.0;
  const BranchResult r = aharonov_step(delta(16, 5), c, Outcome::plus);
  CHECK(r.probability == doctest::Approx(1.0));
  CHECK(std::abs(r.ket[6]) == doctest::Approx(1.0));
  CHECK_THROWS_AS(aharonov_step(delta(16, 5), c, Outcome::minus), std::domain_error);
}

TEST_CASE("branch probabilities are complete") {
  const AharonovConfig c = coined();
  ExtKet psi = gaussian_ext_ket(128, 64.0, 10.0, 0.7);
  for (int j = 0; j < 10; ++j) {
    const BranchResult p = aharonov_step(psi, c, Outcome::plus);
    const BranchResult m = aharonov_step(psi, c, Outcome::minus);
    CHECK(std::abs(p.probability + m.probability - 1.0) < 1e-12);
    double n = 0.0;
    for (const auto& z : p.ket) n += std::norm(z);
    CHECK(n == doctest::Approx(1.0));
    psi = j % 2 ? p.ket : m.ket;
  }
}

TEST_CASE("configuration normalization is enforced") {
  AharonovConfig c;
  c.c_plus = 0.9;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(aharonov_step(delta(8, 0), c, Outcome::plus), std::invalid_argument);
}

TEST_CASE("coinless averaged distribution is binomial") {
  AharonovConfig c;
  const int n = 8, sites = 64, start = 32;
  const auto avg = enumerate_averaged_distribution(delta(sites, start), c, n);
  double worst = 0.0;
  for (int p = 0; p < sites; ++p) {
    const int d = p - start;
    double expected = 0.0;
    if (std::abs(d) <= n && (d + n) % 2 == 0) expected = binomial(n, (d + n) / 2) / std::pow(2.0, n);
    worst = std::max(worst, std::abs(avg[std::size_t(p)] - expected));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("averaged distribution equals the classical random walk") {
  for (int n : {1, 4, 8, 12}) {
    for (bool wide : {false, true}) {
      const AharonovConfig c = coined();
      const ExtKet psi = wide ? gaussian_ext_ket(80, 40.0, 6.0, 0.5) : delta(80, 40);
      std::vector<double> init(psi.size());
      for (std::size_t p = 0; p < psi.size(); ++p) init[p] = std::norm(psi[p]);
      const auto avg = enumerate_averaged_distribution(psi, c, n);
      const auto cl = classical_rw_distribution(c.pi_plus(), n, init);
      double worst = 0.0;
      for (std::size_t p = 0; p < avg.size(); ++p) worst = std::max(worst, std::abs(avg[p] - cl[p]));
      CAPTURE(n);
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("step-dependent spin preparation") {
  std::vector<AharonovConfig> cfg(6, coined());
  std::vector<double> pp;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    const double a = 0.2 + 0.2 * j;
    cfg[j].c_plus = std::cos(a);
    cfg[j].c_minus = std::sin(a);
    pp.push_back(std::cos(a) * std::cos(a));
  }
  const ExtKet psi = gaussian_ext_ket(40, 20.0, 3.0);
  std::vector<double> init(psi.size());
  for (std::size_t p = 0; p < psi.size(); ++p) init[p] = std::norm(psi[p]);
  const auto avg = enumerate_averaged_distribution(psi, cfg);
  const auto cl = classical_rw_distribution(pp, init);
  for (std::size_t p = 0; p < avg.size(); ++p) CHECK(std::abs(avg[p] - cl[p]) < 1e-10);
}

TEST_CASE("enumeration limits") {
  const ExtKet psi = delta(8, 3);
  const auto d0 = enumerate_averaged_distribution(psi, AharonovConfig{}, 0);
  CHECK(d0[3] == 1.0);
  CHECK_THROWS_AS(enumerate_averaged_distribution(psi, AharonovConfig{}, 17), std::invalid_argument);
}

TEST_CASE("classical walk moments") {
  const int n = 8;
  const auto d = classical_rw_distribution(1.0, n, [] {
    std::vector<double> v(32, 0.0);
    v[10] = 1.0;
    return v;
  }());
  CHECK(d[18] == 1.0);
  const double pp = 0.3;
  std::vector<double> init(64, 0.0);
  init[32] = 1.0;
  const auto e = classical_rw_distribution(pp, n, init);
  double mean = 0.0, var = 0.0, total = 0.0;
  for (int p = 0; p < 64; ++p) {
    total += e[std::size_t(p)];
    mean += e[std::size_t(p)] * (p - 32);
  }
  for (int p = 0; p < 64; ++p) var += e[std::size_t(p)] * (p - 32 - mean) * (p - 32 - mean);
  CHECK(std::abs(total - 1.0) < 1e-12);
  CHECK(std::abs(mean - n * (2 * pp - 1)) < 1e-12);
  // each step is +-1, so the variance is 4 N pi+ pi-
  CHECK(std::abs(var - 4.0 * n * pp * (1 - pp)) < 1e-12);
  const auto h = classical_rw_distribution(0.5, n, init);
  for (int k = 0; k <= n; ++k) CHECK(h[std::size_t(32 - n + 2 * k)] == doctest::Approx(binomial(n, k) / 256.0));
  CHECK_THROWS_AS(classical_rw_distribution(1.5, 1, init), std::invalid_argument);
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  const ExtKet psi = gaussian_ext_ket(64, 32.0, 5.0);
  const SampledRun a = sample_measured_walk(psi, coined(), 40, 99);
  const SampledRun b = sample_measured_walk(psi, coined(), 40, 99);
  CHECK(a.outcomes == b.outcomes);
  CHECK(a.ket == b.ket);
  CHECK(a.outcomes.size() == 40);
  for (double p : a.probabilities) CHECK((p > 0.0 && p <= 1.0));
}
