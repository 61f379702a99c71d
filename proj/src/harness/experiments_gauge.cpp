#include <algorithm>
#include <cmath>

#include "experiments_impl.hpp"
#include "qwalk/abelian/current.hpp"
#include "qwalk/abelian/derivatives.hpp"
#include "qwalk/abelian/electric.hpp"
#include "qwalk/abelian/em2d.hpp"
#include "qwalk/abelian/landau.hpp"
#include "qwalk/abelian/phenomenology.hpp"
#include "qwalk/nonabelian/field_strength.hpp"
#include "qwalk/nonabelian/step.hpp"

namespace qw::exp {

namespace {

void randomize(NodeField& f, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  for (double& v : f.values()) v = u(rng);
}

AbelianGaugeField random_potential(const Lattice& lat, int times, double eps, double scale, std::mt19937_64& rng) {
  AbelianGaugeField a(lat, times, eps);
  for (int mu = 0; mu < a.components(); ++mu) randomize(a[mu], scale, rng);
  return a;
}

struct Sweep {
  int trials, steps;
  double eps, scale;
  std::uint64_t seed;
};

Sweep read_sweep(const ExperimentConfig& c) {
  Sweep s{c.get_int("trials", 20), c.get_int("steps", 50), c.get_double("eps", 1.0), c.get_double("field_scale", 1.0),
          c.get_seed("seed", 1)};
  ExperimentConfig::require(s.trials >= 1, "trials", "must be positive");
  ExperimentConfig::require(s.steps >= 1, "steps", "must be positive");
  ExperimentConfig::require(s.eps > 0.0, "eps", "must be positive");
  ExperimentConfig::require(s.scale >= 0.0, "field_scale", "must be non-negative");
  return s;
}

double field_strength_diff(const FieldStrength& x, const FieldStrength& y) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t k = 0; k < x.c[i].values().size(); ++k)
      r = std::max(r, std::abs(x.c[i].values()[k] - y.c[i].values()[k]));
  return r;
}

double field_strength_max(const FieldStrength& x) {
  double r = 0.0;
  for (const auto& f : x.c)
    for (double v : f.values()) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace

RunResult gauge_check(const ExperimentConfig& c) {
  const Sweep s = read_sweep(c);
  const int n1 = c.get_int("sites_1d", 64), n2 = c.get_int("sites_2d", 16);
  const double tol = c.get_double("tolerance", 1e-12);
  ExperimentConfig::require(n1 >= 3, "sites_1d", "needs at least 3 sites");
  ExperimentConfig::require(n2 >= 3, "sites_2d", "needs at least 3 sites");
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> ang(-pi, pi);
  double r1 = 0, r2 = 0, f1 = 0, f2 = 0, pure = 0;
  for (int t = 0; t < s.trials; ++t) {
    for (int dims = 1; dims <= 2; ++dims) {
      const Lattice lat = dims == 1 ? Lattice::line(n1) : Lattice::square(n2, n2);
      const AbelianGaugeField a = random_potential(lat, s.steps, s.eps, s.scale / s.eps, rng);
      GaugePhase phi(lat, s.steps + 1);
      randomize(phi, pi, rng);
      const AbelianGaugeField ap = gauge_transform_potential(a, phi);
      const double mass = ang(rng), dtheta = 0.2 * ang(rng);
      SpinorField psi = random_spinor(lat, 2, rng);
      SpinorField psip = gauge_transform_field(psi, phi, 0);
      for (int j = 0; j < s.steps; ++j) {
        if (dims == 1) {
          psi = electric_step_1d(psi, a, mass, s.eps, j);
          psip = electric_step_1d(psip, ap, mass, s.eps, j);
        } else {
          psi = em_step_2d(psi, a, dtheta, j);
          psip = em_step_2d(psip, ap, dtheta, j);
        }
      }
      const double res = max_abs_diff(gauge_transform_field(psi, phi, s.steps), psip);
      const double fd = field_strength_diff(lattice_field_strength(a), lattice_field_strength(ap));
      AbelianGaugeField zero(lat, s.steps, s.eps);
      const double pg = field_strength_max(lattice_field_strength(gauge_transform_potential(zero, phi)));
      (dims == 1 ? r1 : r2) = std::max(dims == 1 ? r1 : r2, res);
      (dims == 1 ? f1 : f2) = std::max(dims == 1 ? f1 : f2, fd);
      pure = std::max(pure, pg);
    }
  }
  RunResult r;
  r.table.columns = {"residual_1d", "residual_2d", "field_strength_1d", "field_strength_2d", "pure_gauge_field_strength"};
  r.table.add_row({r1, r2, f1, f2, pure});
  check(r, "residual_1d", r1, tol);
  check(r, "residual_2d", r2, tol);
  check(r, "field_strength_1d", f1, tol);
  check(r, "field_strength_2d", f2, tol);
  check(r, "pure_gauge_field_strength", pure, tol);
  return r;
}

RunResult current_check(const ExperimentConfig& c) {
  const Sweep s = read_sweep(c);
  const int n1 = c.get_int("sites_1d", 64), n2 = c.get_int("sites_2d", 16);
  const double tol = c.get_double("tolerance", 1e-12);
  ExperimentConfig::require(n1 >= 3, "sites_1d", "needs at least 3 sites");
  ExperimentConfig::require(n2 >= 3, "sites_2d", "needs at least 3 sites");
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> ang(-pi, pi);
  std::vector<double> res1(static_cast<std::size_t>(s.steps), 0.0), res2 = res1;
  for (int t = 0; t < s.trials; ++t) {
    const Lattice l1 = Lattice::line(n1), l2 = Lattice::square(n2, n2);
    const AbelianGaugeField a1 = random_potential(l1, s.steps, s.eps, s.scale / s.eps, rng);
    const AbelianGaugeField a2 = random_potential(l2, s.steps, s.eps, s.scale / s.eps, rng);
    const double mass = ang(rng), dtheta = 0.2 * ang(rng);
    SpinorField p1 = random_spinor(l1, 2, rng), p2 = random_spinor(l2, 2, rng);
    for (int j = 0; j < s.steps; ++j) {
      const auto u = static_cast<std::size_t>(j);
      SpinorField n = electric_step_1d(p1, a1, mass, s.eps, j);
      res1[u] = std::max(res1[u], continuity_residual_1d(p1, n, s.eps));
      p1 = std::move(n);
      SpinorField half;
      SpinorField m = em_step_2d(p2, a2, dtheta, j, &half);
      res2[u] = std::max(res2[u], continuity_residual_2d(p2, half, m, s.eps));
      p2 = std::move(m);
    }
  }
  RunResult r;
  r.table.columns = {"step", "residual_1d", "residual_2d"};
  for (int j = 0; j < s.steps; ++j) r.table.add_row({double(j), res1[std::size_t(j)], res2[std::size_t(j)]});
  check(r, "residual_1d", *std::max_element(res1.begin(), res1.end()), tol);
  check(r, "residual_2d", *std::max_element(res2.begin(), res2.end()), tol);
  return r;
}

RunResult landau(const ExperimentConfig& c) {
  const double B = c.get_double("B", 0.02);
  const std::vector<double> eps = c.get_list("eps", {1.0 / 64});
  const int levels = c.get_int("levels", 4);
  ExperimentConfig::require(B >= 0.0, "B", "must be non-negative");
  ExperimentConfig::require(levels >= 1, "levels", "must be positive");
  for (double e : eps) {
    ExperimentConfig::require(e > 0.0, "eps", "entries must be positive");
    // quasi-energy per step of the highest level stays small
    ExperimentConfig::require(e * std::sqrt(B * (2.0 * levels + 1.0)) < 0.5, "eps",
                              "weak-field regime needs eps sqrt(B (2 levels + 1)) < 0.5");
  }
  RunResult r;
  r.table.columns = {"eps", "n", "E", "sqrt_2nB"};
  for (double e : eps) {
    const auto E = landau_quasienergies(B, e, levels + 1);
    for (int n = 0; n <= levels; ++n) r.table.add_row({e, double(n), E[std::size_t(n)], std::sqrt(2.0 * n * B)});
  }
  // E_n = c sqrt(n) through the origin on the first eps, n >= 1
  const auto E = landau_quasienergies(B, eps.front(), levels + 1);
  double sxy = 0, sxx = 0, mean = 0;
  for (int n = 1; n <= levels; ++n) {
    sxy += std::sqrt(double(n)) * E[std::size_t(n)];
    sxx += n;
    mean += E[std::size_t(n)];
  }
  mean /= levels;
  const double coef = sxy / sxx;
  double ssr = 0, sst = 0;
  for (int n = 1; n <= levels; ++n) {
    const double y = E[std::size_t(n)];
    ssr += (y - coef * std::sqrt(double(n))) * (y - coef * std::sqrt(double(n)));
    sst += (y - mean) * (y - mean);
  }
  r.table.add_meta("result.sqrt_fit_coefficient", coef);
  r.table.add_meta("result.sqrt_fit_r2", sst > 0 ? 1.0 - ssr / sst : 1.0);
  r.table.add_meta("result.expected_coefficient", std::sqrt(2.0 * B));
  return r;
}

RunResult bloch(const ExperimentConfig& c) {
  BlochConfig b;
  b.sites = c.get_int("sites", b.sites);
  b.steps = c.get_int("steps", b.steps);
  b.field = c.get_double("field", b.field);
  b.mass = c.get_double("mass", b.mass);
  b.width = c.get_double("width", b.width);
  ExperimentConfig::require(b.sites >= 16, "sites", "needs at least 16 sites");
  ExperimentConfig::require(b.steps >= 8, "steps", "needs at least 8 steps");
  ExperimentConfig::require(b.field > 0.0 && b.field < pi, "field", "eps E must lie in (0, pi)");
  ExperimentConfig::require(b.width > 0.0, "width", "must be positive");
  ExperimentConfig::require(2.0 * pi / b.field <= b.steps, "steps", "must cover at least one Bloch period");
  const BlochResult res = bloch_oscillation(b);
  RunResult r;
  r.table.columns = {"step", "mean_x"};
  for (std::size_t j = 0; j < res.mean_x.size(); ++j) r.table.add_row({double(j), res.mean_x[j]});
  r.table.add_meta("result.period", res.period);
  r.table.add_meta("result.expected_period", res.expected_period);
  return r;
}

RunResult exb(const ExperimentConfig& c) {
  DriftConfig d;
  d.sites = c.get_int("sites", d.sites);
  d.steps = c.get_int("steps", d.steps);
  d.flux_quanta = c.get_int("flux_quanta", d.flux_quanta);
  d.e_over_b = c.get_double("e_over_b", d.e_over_b);
  d.width = c.get_double("width", d.width);
  d.delta_theta = c.get_double("delta_theta", d.delta_theta);
  ExperimentConfig::require(d.sites >= 16, "sites", "needs at least 16 sites");
  ExperimentConfig::require(d.steps >= 2, "steps", "needs at least 2 steps");
  ExperimentConfig::require(d.flux_quanta >= 1, "flux_quanta", "must be positive");
  ExperimentConfig::require(std::abs(d.e_over_b) < 1.0, "e_over_b", "drift speed must stay below 1");
  const DriftResult res = exb_drift(d);
  RunResult r;
  r.table.columns = {"step", "x", "y"};
  for (std::size_t j = 0; j < res.x.size(); ++j) r.table.add_row({double(j), res.x[j], res.y[j]});
  r.table.add_meta("result.vx", res.vx);
  r.table.add_meta("result.vy", res.vy);
  r.table.add_meta("result.speed", res.speed);
  r.table.add_meta("result.expected_speed", res.expected);
  return r;
}

RunResult rational_field(const ExperimentConfig& c) {
  FluxConfig f;
  f.sites = c.get_int("sites", f.sites);
  f.steps = c.get_int("steps", f.steps);
  f.width = c.get_double("width", f.width);
  const std::vector<double> flux = c.get_list("flux", {0.25, 0.251});
  const double pert = c.get_double("perturbation", 1e-10);
  ExperimentConfig::require(f.sites >= 16, "sites", "needs at least 16 sites");
  ExperimentConfig::require(f.steps >= 1, "steps", "must be positive");
  ExperimentConfig::require(f.steps < f.sites / 2, "steps", "the packet must not reach the seam (steps < sites / 2)");
  RunResult r;
  r.table.columns = {"flux", "participation_ratio", "perturbed_participation_ratio"};
  for (double x : flux) {
    f.flux = x;
    f.perturbation = 0.0;
    const double a = flux_spreading(f);
    f.perturbation = pert;
    const double b = flux_spreading(f);
    r.table.add_row({x, a, b});
  }
  if (flux.size() >= 2) {
    // the dichotomy: the spreading difference between the first two fluxes against the perturbation response
    const auto& r0 = r.table.rows[0];
    const auto& r1 = r.table.rows[1];
    const double noise = std::max(std::abs(r0[2] - r0[1]), std::abs(r1[2] - r1[1]));
    r.table.add_meta("result.difference", std::abs(r1[1] - r0[1]));
    r.table.add_meta("result.noise", noise);
  }
  return r;
}

RunResult nonabelian_check(const ExperimentConfig& c) {
  const Sweep s = read_sweep(c);
  const int sites = c.get_int("sites", 32);
  const std::vector<double> dims = c.get_list("N", {1, 2, 3});
  const double tol = c.get_double("tolerance", 1e-11);
  const double tol_red = c.get_double("reduction_tolerance", 1e-13);
  ExperimentConfig::require(sites >= 3, "sites", "needs at least 3 sites");
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> ang(-pi, pi);
  const Lattice lat = Lattice::line(sites);
  RunResult r;
  // current_residual is reported only; lattice current conservation for U(N) fields is not asserted
  r.table.columns = {"N", "walk_covariance", "field_strength_covariance", "abelian_reduction", "current_residual"};
  for (double dn : dims) {
    ExperimentConfig::require(dn >= 1 && dn == std::floor(dn) && dn <= 8, "N", "entries must be integers in [1, 8]");
    const int n = static_cast<int>(dn);
    double cov = 0, fcov = 0, red = 0, cur = 0;
    for (int t = 0; t < s.trials; ++t) {
      NonAbelianGaugeField g(lat, s.steps + 1, n, s.eps);
      for (int j = 0; j < g.times(); ++j)
        for (std::size_t p = 0; p < lat.sites(); ++p) {
          g.b0(j, p) = random_hermitian(n, s.scale, rng);
          g.b1(j, p) = random_hermitian(n, s.scale, rng);
        }
      GaugeGroupField G(lat, s.steps + 2, n);
      for (int j = 0; j < G.times(); ++j)
        for (std::size_t p = 0; p < lat.sites(); ++p) G(j, p) = random_unitary(n, rng);
      const double dtheta = 0.3 * ang(rng);
      SpinorField psi = random_spinor(lat, 2 * n, rng);
      SpinorField psip = gauge_rotate(psi, G, 0);
      for (int j = 0; j < s.steps; ++j) {
        const GroupLinkPair l = link_exponentials(g, j), l1 = link_exponentials(g, j + 1);
        const GroupLinkPair lp = gauge_transform_links(l, G, j), lp1 = gauge_transform_links(l1, G, j + 1);
        SpinorField next = nonabelian_step(psi, l, dtheta);
        cur = std::max(cur, continuity_residual_1d(psi, next, s.eps));
        psi = std::move(next);
        psip = nonabelian_step(psip, lp, dtheta);
        cov = std::max(cov, max_abs_diff(gauge_rotate(psi, G, j + 1), psip));
        const auto f = lattice_field_strength_covariant(l, l1);
        const auto fp = lattice_field_strength_covariant(lp, lp1);
        for (std::size_t p = 0; p < lat.sites(); ++p) {
          const Eigen::MatrixXcd& gp = G(j + 2, p);
          fcov = std::max(fcov, (fp[p] - gp * f[p] * gp.adjoint()).cwiseAbs().maxCoeff());
        }
      }
      if (n == 1) {
        AbelianGaugeField a(lat, s.steps, s.eps);
        for (int j = 0; j < s.steps; ++j)
          for (std::size_t p = 0; p < lat.sites(); ++p) {
            a[0](j, p) = g.b0(j, p)(0, 0).real() / s.eps;
            a[1](j, p) = -g.b1(j, p)(0, 0).real() / s.eps;
          }
        SpinorField x = random_spinor(lat, 2, rng), y = x;
        const double mass = -dtheta / s.eps;
        for (int j = 0; j < s.steps; ++j) {
          x = nonabelian_step(x, link_exponentials(g, j), dtheta);
          y = electric_step_1d(y, a, mass, s.eps, j);
        }
        red = std::max(red, max_abs_diff(x, y));
      }
    }
    r.table.add_row({dn, cov, fcov, red, cur});
    check(r, "walk_covariance(N=" + std::to_string(n) + ")", cov, tol);
    check(r, "field_strength_covariance(N=" + std::to_string(n) + ")", fcov, tol);
    if (n == 1) check(r, "abelian_reduction", red, tol_red);
  }
  return r;
}

}  // namespace qw::exp
