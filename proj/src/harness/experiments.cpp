#include "qwalk/harness/experiments.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "experiments_impl.hpp"
#include "qwalk/abelian/em2d.hpp"
#include "qwalk/abelian/phenomenology.hpp"
#include "qwalk/core/evolve.hpp"
#include "qwalk/core/fourier.hpp"

namespace qw {

namespace exp {

SpinorField random_spinor(const Lattice& lat, int internal, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  SpinorField f(lat, internal);
  for (auto& z : f.amplitudes()) z = {nd(rng), nd(rng)};
  f.normalize();
  return f;
}

void check(RunResult& r, const std::string& what, double value, double tol) {
  if (value < tol) return;
  r.property_ok = false;
  if (!r.property_message.empty()) r.property_message += "; ";
  r.property_message += what + " = " + format_double(value) + " exceeds " + format_double(tol);
}

namespace {

void moments_1d(const SpinorField& f, double& norm, double& mean, double& sigma) {
  const auto rho = f.density();
  norm = pairwise_sum(rho);
  const auto m = mean_position(f);
  mean = m[0];
  const double n = f.lattice().extent(0);
  double v = 0.0;
  for (std::size_t p = 0; p < rho.size(); ++p) {
    double d = static_cast<double>(p) - mean;
    d -= n * std::round(d / n);
    v += rho[p] * d * d;
  }
  sigma = std::sqrt(v / norm);
}

}  // namespace

RunResult evolve1d(const ExperimentConfig& c) {
  const int sites = c.get_int("sites", 1024);
  const int steps = c.get_int("steps", 100);
  CoinAngles q;
  q.alpha = c.get_double("alpha", 0.0);
  q.theta = c.get_double("theta", 0.25 * pi);
  q.xi = c.get_double("xi", 0.0);
  q.zeta = c.get_double("zeta", 0.0);
  Packet pk;
  pk.center0 = c.get_double("center", 0.5 * sites);
  pk.width = c.get_double("width", 10.0);
  pk.k0 = c.get_double("k0", 0.0);
  const double sa = c.get_double("spin_angle", 0.25 * pi), sp = c.get_double("spin_phase", 0.5 * pi);
  ExperimentConfig::require(sites >= 2, "sites", "needs at least 2 sites");
  ExperimentConfig::require(steps >= 0, "steps", "must be non-negative");
  ExperimentConfig::require(pk.width > 0.0, "width", "must be positive");
  pk.up = std::cos(sa);
  pk.down = std::sin(sa) * std::exp(cplx{0.0, sp});
  const Lattice lat = Lattice::line(sites);
  SpinorField f = gaussian_packet(lat, pk);
  const Mat2 u = build_coin_euler(q);
  RunResult r;
  r.table.columns = {"step", "norm", "mean_x", "sigma_x"};
  for (int j = 0; j <= steps; ++j) {
    double n, m, s;
    moments_1d(f, n, m, s);
    r.table.add_row({double(j), n, m, s});
    if (j < steps) f = step(f, u, 0);
  }
  return r;
}

RunResult evolve2d(const ExperimentConfig& c) {
  const int nx = c.get_int("nx", 128), ny = c.get_int("ny", 128);
  const int steps = c.get_int("steps", 100);
  const double eps = c.get_double("eps", 1.0);
  const double e_field = c.get_double("E", 0.0);
  const int quanta = c.get_int("flux_quanta", 0);
  const double dtheta = c.get_double("delta_theta", 0.0);
  const double width = c.get_double("width", 6.0);
  ExperimentConfig::require(nx >= 2 && ny >= 2, "nx", "lattice needs at least 2x2 sites");
  ExperimentConfig::require(steps >= 0, "steps", "must be non-negative");
  ExperimentConfig::require(eps > 0.0, "eps", "must be positive");
  ExperimentConfig::require(width > 0.0, "width", "must be positive");
  const Lattice lat = Lattice::square(nx, ny);
  // A1 = -E t, A2 = -B x with B eps^2 nx = 2 pi flux_quanta so the field is periodic.
  const double b = 2.0 * pi * quanta / nx;
  AbelianGaugeField a(lat, std::max(steps, 1), eps);
  for (int j = 0; j < a.times(); ++j)
    for (std::size_t s = 0; s < lat.sites(); ++s) {
      a[1](j, s) = -e_field * j * eps;
      a[2](j, s) = -b * lat.coord(s, 0) / (eps * eps);
    }
  Packet pk;
  pk.center0 = 0.5 * nx;
  pk.center1 = 0.5 * ny;
  pk.width = width;
  pk.up = 1.0 / std::sqrt(2.0);
  pk.down = cplx{0.0, 1.0 / std::sqrt(2.0)};
  SpinorField f = gaussian_packet(lat, pk);
  RunResult r;
  r.table.columns = {"step", "norm", "mean_x", "mean_y"};
  for (int j = 0; j <= steps; ++j) {
    const auto m = mean_position(f);
    r.table.add_row({double(j), f.norm2(), m[0], m[1]});
    if (j < steps) f = em_step_2d(f, a, dtheta, j);
  }
  return r;
}

RunResult dispersion(const ExperimentConfig& c) {
  const double theta = c.get_double("theta", 0.0);
  const double xi = c.get_double("xi", 0.0);
  const int points = c.get_int("points", 256);
  ExperimentConfig::require(points >= 1, "points", "must be positive");
  RunResult r;
  r.table.columns = {"k", "E_plus", "E_minus"};
  for (int i = 0; i < points; ++i) {
    const double k = -pi + 2.0 * pi * i / points;
    const Dispersion d = qw::dispersion(theta, xi, k);
    r.table.add_row({k, d.plus, d.minus});
  }
  return r;
}

}  // namespace exp

namespace {

using Runner = std::function<RunResult(const ExperimentConfig&)>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> m = {
      {"evolve1d", exp::evolve1d},
      {"evolve2d", exp::evolve2d},
      {"dispersion", exp::dispersion},
      {"gauge-check", exp::gauge_check},
      {"current-check", exp::current_check},
      {"landau", exp::landau},
      {"bloch", exp::bloch},
      {"exb", exp::exb},
      {"rational-field", exp::rational_field},
      {"nonabelian-check", exp::nonabelian_check},
      {"curved-schwarzschild", exp::curved_schwarzschild},
      {"gw-scan", exp::gw_scan},
      {"aharonov", exp::aharonov},
      {"convergence", exp::convergence},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

RunResult run(const ExperimentConfig& config) {
  const auto it = registry().find(config.experiment());
  if (it == registry().end()) throw ConfigError("unknown experiment '" + config.experiment() + "'");
  const bool wall = config.get_bool("record_wall_time", false);
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r;
  try {
    r = it->second(config);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto unused = config.unused_keys();
  if (!unused.empty()) {
    std::string list;
    for (const auto& k : unused) list += (list.empty() ? "" : ", ") + k;
    throw ConfigError("unknown key(s) for " + config.experiment() + ": " + list);
  }
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("experiment", config.experiment());
  meta.emplace_back("code_version", code_version);
  for (const auto& [k, v] : config.resolved()) meta.emplace_back("config." + k, v);
  for (const auto& [k, v] : config.values())
    if (!config.resolved().count(k)) meta.emplace_back("config." + k, v);
  if (wall) meta.emplace_back("wall_time_s", format_double(elapsed));
  meta.emplace_back("property_ok", r.property_ok ? "true" : "false");
  if (!r.property_message.empty()) meta.emplace_back("property_message", r.property_message);
  meta.insert(meta.end(), r.table.metadata.begin(), r.table.metadata.end());
  r.table.metadata = std::move(meta);
  r.table.validate();
  return r;
}

}  // namespace qw
