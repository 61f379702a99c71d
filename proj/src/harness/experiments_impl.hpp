#pragma once

#include <random>

#include "qwalk/core/lattice.hpp"
#include "qwalk/harness/experiments.hpp"

namespace qw::exp {

RunResult evolve1d(const ExperimentConfig& c);
RunResult evolve2d(const ExperimentConfig& c);
RunResult dispersion(const ExperimentConfig& c);
RunResult gauge_check(const ExperimentConfig& c);
RunResult current_check(const ExperimentConfig& c);
RunResult landau(const ExperimentConfig& c);
RunResult bloch(const ExperimentConfig& c);
RunResult exb(const ExperimentConfig& c);
RunResult rational_field(const ExperimentConfig& c);
RunResult nonabelian_check(const ExperimentConfig& c);
RunResult curved_schwarzschild(const ExperimentConfig& c);
RunResult gw_scan(const ExperimentConfig& c);
RunResult aharonov(const ExperimentConfig& c);
RunResult convergence(const ExperimentConfig& c);

// Normalized field with independent Gaussian amplitudes.
SpinorField random_spinor(const Lattice& lat, int internal, std::mt19937_64& rng);

void check(RunResult& r, const std::string& what, double value, double tol);

}  // namespace qw::exp
