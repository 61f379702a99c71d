#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/core/types.hpp"

namespace qw {

// Spin preparation c+, c- and coin e^{i omega} [[alpha, beta], [-beta*, alpha*]].
struct AharonovConfig {
  cplx c_plus{1.0 / 1.4142135623730951, 0.0};
  cplx c_minus{1.0 / 1.4142135623730951, 0.0};
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};
  double omega = 0.0;

  // Throws std::invalid_argument when either pair is not normalized within 1e-12.
  void validate() const;
  double pi_plus() const { return std::norm(c_plus); }
};

enum class Outcome : int { minus = -1, plus = +1 };

using ExtKet = std::vector<cplx>;  // amplitudes over a periodic line
using OutcomeSequence = std::vector<Outcome>;

struct BranchResult {
  ExtKet ket;  // normalized
  double probability = 0.0;
};

//   A+ psi_p = e^{i w} ( alpha c+ psi_{p-1} + beta c- psi_{p+1}) / sqrt(P+)
//   A- psi_p = e^{i w} (-beta* c+ psi_{p-1} + alpha* c- psi_{p+1}) / sqrt(P-)
// Throws std::domain_error when P < 1e-15.
BranchResult aharonov_step(const ExtKet& psi, const AharonovConfig& cfg, Outcome outcome);

// Unnormalized branch; its squared norm is P times the input squared norm.
ExtKet aharonov_apply(const ExtKet& psi, const AharonovConfig& cfg, Outcome outcome);

inline constexpr int max_enumeration_steps = 16;

// Sum over all 2^N outcome sequences of P(sequence) |psi^{sequence}_p|^2. N <= 16.
std::vector<double> enumerate_averaged_distribution(const ExtKet& psi, const AharonovConfig& cfg, int n);
// Per-step configs, one per step.
std::vector<double> enumerate_averaged_distribution(const ExtKet& psi, const std::vector<AharonovConfig>& cfg);

// P_{j+1,p} = pi+_j P_{j,p-1} + pi-_j P_{j,p+1} on a periodic line.
std::vector<double> classical_rw_distribution(const std::vector<double>& pi_plus, const std::vector<double>& initial);
std::vector<double> classical_rw_distribution(double pi_plus, int n, const std::vector<double>& initial);

struct SampledRun {
  OutcomeSequence outcomes;
  std::vector<double> probabilities;
  ExtKet ket;
};

// Draws outcomes with their Born probabilities from a seeded generator.
SampledRun sample_measured_walk(const ExtKet& psi, const AharonovConfig& cfg, int n, std::uint64_t seed);

ExtKet gaussian_ext_ket(int sites, double center, double width, double k0 = 0.0);
std::vector<double> ext_density(const ExtKet& psi);

}  // namespace qw
