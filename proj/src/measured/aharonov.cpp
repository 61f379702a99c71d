#include "qwalk/measured/aharonov.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qw {

void AharonovConfig::validate() const {
  if (std::abs(std::norm(c_plus) + std::norm(c_minus) - 1.0) > 1e-12)
    throw std::invalid_argument("spin preparation is not normalized");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
    throw std::invalid_argument("coin coefficients are not normalized");
  if (!std::isfinite(omega)) throw std::invalid_argument("coin phase is not finite");
}

namespace {

double norm2(const ExtKet& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return s;
}

}  // namespace

ExtKet aharonov_apply(const ExtKet& psi, const AharonovConfig& cfg, Outcome outcome) {
  const std::size_t n = psi.size();
  if (n == 0) throw std::invalid_argument("empty ket");
  const cplx ph = std::exp(cplx{0.0, cfg.omega});
  cplx from_left, from_right;
  if (outcome == Outcome::plus) {
    from_left = ph * cfg.alpha * cfg.c_plus;
    from_right = ph * cfg.beta * cfg.c_minus;
  } else {
    from_left = -ph * std::conj(cfg.beta) * cfg.c_plus;
    from_right = ph * std::conj(cfg.alpha) * cfg.c_minus;
  }
  ExtKet out(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t pm = p == 0 ? n - 1 : p - 1, pp = p + 1 == n ? 0 : p + 1;
    out[p] = from_left * psi[pm] + from_right * psi[pp];
  }
  return out;
}

BranchResult aharonov_step(const ExtKet& psi, const AharonovConfig& cfg, Outcome outcome) {
  cfg.validate();
  BranchResult r;
  r.ket = aharonov_apply(psi, cfg, outcome);
  r.probability = norm2(r.ket) / norm2(psi);
  if (r.probability < 1e-15)
    throw std::domain_error("outcome probability " + std::to_string(r.probability) + " is below 1e-15");
  const double s = 1.0 / std::sqrt(norm2(r.ket));
  for (cplx& z : r.ket) z *= s;
  return r;
}

namespace {

// Unnormalized branches carry P(sequence) in their norm, so the averaged density is the sum of |branch|^2.
void accumulate(const ExtKet& psi, const std::vector<AharonovConfig>& cfg, std::size_t j, std::vector<double>& acc) {
  if (j == cfg.size()) {
    for (std::size_t p = 0; p < psi.size(); ++p) acc[p] += std::norm(psi[p]);
    return;
  }
  for (Outcome o : {Outcome::plus, Outcome::minus}) {
    ExtKet next = aharonov_apply(psi, cfg[j], o);
    if (norm2(next) == 0.0) continue;
    accumulate(next, cfg, j + 1, acc);
  }
}

}  // namespace

std::vector<double> enumerate_averaged_distribution(const ExtKet& psi, const std::vector<AharonovConfig>& cfg) {
  if (static_cast<int>(cfg.size()) > max_enumeration_steps)
    throw std::invalid_argument("enumeration is limited to " + std::to_string(max_enumeration_steps) +
                                " steps; use sample_measured_walk");
  for (const auto& c : cfg) c.validate();
  const double nrm = norm2(psi);
  if (!(nrm > 0.0)) throw std::invalid_argument("ket has zero norm");
  ExtKet start = psi;
  const double s = 1.0 / std::sqrt(nrm);
  for (cplx& z : start) z *= s;
  std::vector<double> acc(psi.size(), 0.0);
  accumulate(start, cfg, 0, acc);
  return acc;
}

std::vector<double> enumerate_averaged_distribution(const ExtKet& psi, const AharonovConfig& cfg, int n) {
  if (n < 0) throw std::invalid_argument("negative step count");
  if (n > max_enumeration_steps)
    throw std::invalid_argument("enumeration is limited to " + std::to_string(max_enumeration_steps) +
                                " steps; use sample_measured_walk");
  return enumerate_averaged_distribution(psi, std::vector<AharonovConfig>(static_cast<std::size_t>(n), cfg));
}

std::vector<double> classical_rw_distribution(const std::vector<double>& pi_plus, const std::vector<double>& initial) {
  const std::size_t n = initial.size();
  std::vector<double> cur = initial, next(n);
  for (double pp : pi_plus) {
    if (!(pp >= 0.0 && pp <= 1.0)) throw std::invalid_argument("step probability outside [0, 1]");
    const double pm = 1.0 - pp;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t l = p == 0 ? n - 1 : p - 1, r = p + 1 == n ? 0 : p + 1;
      next[p] = pp * cur[l] + pm * cur[r];
    }
    cur.swap(next);
  }
  return cur;
}

std::vector<double> classical_rw_distribution(double pi_plus, int n, const std::vector<double>& initial) {
  if (n < 0) throw std::invalid_argument("negative step count");
  return classical_rw_distribution(std::vector<double>(static_cast<std::size_t>(n), pi_plus), initial);
}

SampledRun sample_measured_walk(const ExtKet& psi, const AharonovConfig& cfg, int n, std::uint64_t seed) {
  cfg.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SampledRun run;
  run.ket = psi;
  const double s = 1.0 / std::sqrt(norm2(psi));
  for (cplx& z : run.ket) z *= s;
  for (int j = 0; j < n; ++j) {
    const double pp = norm2(aharonov_apply(run.ket, cfg, Outcome::plus));
    const Outcome o = u(rng) < pp ? Outcome::plus : Outcome::minus;
    BranchResult b = aharonov_step(run.ket, cfg, o);
    run.outcomes.push_back(o);
    run.probabilities.push_back(b.probability);
    run.ket = std::move(b.ket);
  }
  return run;
}

ExtKet gaussian_ext_ket(int sites, double center, double width, double k0) {
  if (sites < 1) throw std::invalid_argument("need at least one site");
  ExtKet v(static_cast<std::size_t>(sites));
  for (int p = 0; p < sites; ++p) {
    double d = p - center;
    d -= sites * std::round(d / sites);
    v[static_cast<std::size_t>(p)] = std::exp(cplx{-d * d / (4.0 * width * width), k0 * p});
  }
  const double s = 1.0 / std::sqrt(norm2(v));
  for (cplx& z : v) z *= s;
  return v;
}

std::vector<double> ext_density(const ExtKet& psi) {
  std::vector<double> d(psi.size());
  for (std::size_t p = 0; p < psi.size(); ++p) d[p] = std::norm(psi[p]);
  return d;
}

}  // namespace qw
