#include <algorithm>
#include <cmath>

#include "experiments_impl.hpp"
#include "qwalk/curved/gw.hpp"
#include "qwalk/curved/walk1p1.hpp"
#include "qwalk/measured/aharonov.hpp"
#include "qwalk/oracle/convergence.hpp"

namespace qw::exp {

RunResult curved_schwarzschild(const ExperimentConfig& c) {
  const int sites = c.get_int("sites", 1024);
  const int steps = c.get_int("steps", 200);
  const double rs = c.get_double("rs", 256.0);
  const double v_min = c.get_double("v_min", 1e-3);
  const int start = c.get_int("start", static_cast<int>(std::lround(rs)));
  const int window = c.get_int("window", 3);
  const std::string profile = c.get_string("profile", "schwarzschild");
  const double sa = c.get_double("spin_angle", 0.25 * pi), sp = c.get_double("spin_phase", 0.0);
  ExperimentConfig::require(sites >= 8, "sites", "needs at least 8 sites");
  ExperimentConfig::require(steps >= 0, "steps", "must be non-negative");
  ExperimentConfig::require(rs > 0.0 && rs < sites, "rs", "horizon must lie inside the lattice");
  ExperimentConfig::require(v_min > 0.0 && v_min <= 1.0, "v_min", "must lie in (0, 1]");
  ExperimentConfig::require(start >= 0 && start < sites, "start", "must be a lattice site");
  ExperimentConfig::require(window >= 0, "window", "must be non-negative");
  ExperimentConfig::require(profile == "schwarzschild" || profile == "flat", "profile", "must be schwarzschild or flat");
  const NodeField theta = profile == "flat" ? NodeField(Lattice::line(sites), 1, 0.0) : schwarzschild_profile(sites, rs, v_min);
  SpinorField f(Lattice::line(sites), 2);
  f.at(std::size_t(start), 0) = std::cos(sa);
  f.at(std::size_t(start), 1) = std::sin(sa) * std::exp(cplx{0.0, sp});
  const long centre = std::lround(rs);
  RunResult r;
  r.table.columns = {"step", "near_horizon", "mean_x", "norm"};
  for (int j = 0; j <= steps; ++j) {
    const auto rho = f.density();
    double near = 0.0, mean = 0.0;
    for (std::size_t p = 0; p < rho.size(); ++p) {
      if (std::abs(static_cast<long>(p) - centre) <= window) near += rho[p];
      mean += rho[p] * static_cast<double>(p);
    }
    r.table.add_row({double(j), near, mean, pairwise_sum(rho)});
    if (j < steps) f = curved_step_1p1(f, theta, j);
  }
  return r;
}

RunResult gw_scan(const ExperimentConfig& c) {
  const int lmin = c.get_int("lambda_min", 2), lmax = c.get_int("lambda_max", 32);
  const int base = c.get_int("base_extent", 32);
  const double xi = c.get_double("xi", 0.01);
  const double headroom = c.get_double("headroom", 2.0);
  const double profile = c.get_double("profile", 1.0);
  const std::string pol_name = c.get_string("polarization", "diagonal");
  ExperimentConfig::require(lmin >= 2 && lmax >= lmin, "lambda_min", "need 2 <= lambda_min <= lambda_max");
  ExperimentConfig::require(base >= 2, "base_extent", "must be at least 2");
  ExperimentConfig::require(std::abs(xi) <= 0.05, "xi", "perturbative regime needs |xi| <= 0.05");
  ExperimentConfig::require(headroom >= 1.0, "headroom", "must be at least 1");
  ExperimentConfig::require(pol_name == "diagonal" || pol_name == "off_diagonal", "polarization",
                            "must be diagonal or off_diagonal");
  const GwPolarization pol = pol_name == "diagonal" ? GwPolarization::diagonal_traceless : GwPolarization::off_diagonal;
  RunResult r;
  r.table.columns = {"lambda", "extent", "max_relative_change"};
  double best = -1.0, best_lambda = 0.0;
  for (int l = lmin; l <= lmax; ++l) {
    // smallest multiple of lambda not below base_extent, so the modes fit the periodic box
    const int extent = l * ((base + l - 1) / l);
    const Lattice lat = Lattice::square(extent, extent);
    const SpinorField state = gw_two_mode_state(2.0 * pi / l, lat, headroom);
    const GwChange ch = gw_relative_density_change(state, xi, profile, pol, headroom);
    r.table.add_row({double(l), double(extent), ch.max_abs});
    if (ch.max_abs > best) {
      best = ch.max_abs;
      best_lambda = l;
    }
  }
  r.table.add_meta("result.argmax_lambda", best_lambda);
  return r;
}

RunResult aharonov(const ExperimentConfig& c) {
  const int steps = c.get_int("steps", 8);
  const int sites = c.get_int("sites", 2 * steps + 33);
  const std::string mode = c.get_string("mode", "enumerate");
  AharonovConfig a;
  const double sa = c.get_double("spin_angle", 0.25 * pi), sp = c.get_double("spin_phase", 0.0);
  const double ct = c.get_double("coin_theta", 0.0), cx = c.get_double("coin_xi", 0.0), cz = c.get_double("coin_zeta", 0.0);
  a.omega = c.get_double("omega", 0.0);
  const double width = c.get_double("width", 0.0);
  const std::uint64_t seed = c.get_seed("seed", 1);
  ExperimentConfig::require(steps >= 0, "steps", "must be non-negative");
  ExperimentConfig::require(sites >= 3, "sites", "needs at least 3 sites");
  ExperimentConfig::require(width >= 0.0, "width", "must be non-negative");
  ExperimentConfig::require(mode == "enumerate" || mode == "sample", "mode", "must be enumerate or sample");
  ExperimentConfig::require(mode == "sample" || steps <= max_enumeration_steps, "steps",
                            "enumeration needs steps <= " + std::to_string(max_enumeration_steps));
  a.c_plus = std::cos(sa);
  a.c_minus = std::sin(sa) * std::exp(cplx{0.0, sp});
  a.alpha = std::cos(ct) * std::exp(cplx{0.0, cx});
  a.beta = std::sin(ct) * std::exp(cplx{0.0, cz});
  ExtKet psi;
  if (width > 0.0) {
    psi = gaussian_ext_ket(sites, 0.5 * sites, width);
  } else {
    psi.assign(std::size_t(sites), 0.0);
    psi[std::size_t(sites / 2)] = 1.0;
  }
  RunResult r;
  if (mode == "enumerate") {
    const auto avg = enumerate_averaged_distribution(psi, a, steps);
    const auto cl = classical_rw_distribution(a.pi_plus(), steps, ext_density(psi));
    r.table.columns = {"p", "averaged", "classical"};
    double dev = 0.0;
    for (int p = 0; p < sites; ++p) {
      r.table.add_row({double(p), avg[std::size_t(p)], cl[std::size_t(p)]});
      dev = std::max(dev, std::abs(avg[std::size_t(p)] - cl[std::size_t(p)]));
    }
    r.table.add_meta("result.max_deviation", dev);
    check(r, "averaged vs classical deviation", dev, c.get_double("tolerance", 1e-10));
  } else {
    const SampledRun run = sample_measured_walk(psi, a, steps, seed);
    r.table.columns = {"step", "outcome", "probability"};
    for (std::size_t j = 0; j < run.outcomes.size(); ++j)
      r.table.add_row({double(j), double(static_cast<int>(run.outcomes[j])), run.probabilities[j]});
  }
  return r;
}

RunResult convergence(const ExperimentConfig& c) {
  DiracWalkCase w;
  w.mass = c.get_double("mass", 1.0);
  w.e_field = c.get_double("E", 0.0);
  w.a0 = c.get_double("a0", 0.0);
  w.a1 = c.get_double("a1", 0.0);
  w.length = c.get_double("length", 16.0);
  w.time = c.get_double("time", 1.0);
  const std::vector<double> eps = c.get_list("eps", {1.0 / 32, 1.0 / 64, 1.0 / 128});
  const double min_order = c.get_double("min_order", 0.0);
  ExperimentConfig::require(eps.size() >= 3, "eps", "needs at least 3 values");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    ExperimentConfig::require(eps[i] > 0.0, "eps", "entries must be positive");
    ExperimentConfig::require(i == 0 || eps[i] < eps[i - 1], "eps", "must be strictly decreasing");
  }
  ExperimentConfig::require(w.length > 0.0 && w.time > 0.0, "length", "box length and time must be positive");
  RunResult r;
  r.table.columns = {"eps", "error"};
  std::vector<double> err;
  for (double e : eps) {
    err.push_back(walk_oracle_error(w, e));
    r.table.add_row({e, err.back()});
  }
  const bool exact = *std::max_element(err.begin(), err.end()) < 1e-12;
  if (!exact) {
    const ConvergenceReport rep = fit_order(eps, err);
    r.table.add_meta("result.order", rep.order);
    r.table.add_meta("result.r2", rep.r2);
    if (rep.order < min_order) {
      r.property_ok = false;
      r.property_message = "fitted order " + format_double(rep.order) + " below " + format_double(min_order);
    }
  } else {
    r.table.add_meta("result.exact", "true");
  }
  return r;
}

}  // namespace qw::exp
