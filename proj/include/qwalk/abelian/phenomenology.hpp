#pragma once

#include <array>
#include <vector>

#include "qwalk/core/lattice.hpp"

namespace qw {

struct Packet {
  double center0 = 0.0, center1 = 0.0;
  double width = 6.0;  // sites, standard deviation of |psi|^2 is width / sqrt 2
  double k0 = 0.0, k1 = 0.0;
  cplx up{1.0, 0.0}, down{0.0, 0.0};
};

// Normalized Gaussian packet exp(-d^2 / (2 width^2) + i k.p) times the spinor (up, down).
// Distances use the nearest periodic image.
SpinorField gaussian_packet(const Lattice& lat, const Packet& p);

// Probability-weighted mean coordinate per axis, taking the mean of the circular embedding so that
// a packet straddling the seam is handled; result in [0, extent).
std::array<double, 2> mean_position(const SpinorField& psi);
// Unwrap a periodic trajectory so consecutive samples differ by less than half the extent.
void unwrap(std::vector<double>& x, double extent);

// 1 / sum rho^2 of the normalized density.
double participation_ratio(const SpinorField& psi);

// Period (in samples) with the largest periodogram power, scanned on a fine grid in [min_period, max_period].
double dominant_period(const std::vector<double>& x, double min_period, double max_period);

// Least-squares slope of y against the sample index.
double linear_slope(const std::vector<double>& y);

struct BlochConfig {
  int sites = 512;
  int steps = 400;
  double field = 2.0 * pi / 50.0;  // eps * E
  double mass = 0.25 * pi;         // eps_m * m; keeps the band gap wide enough to suppress interband leakage
  double eps = 1.0;
  double width = 6.0;
};

struct BlochResult {
  std::vector<double> mean_x;
  double period = 0.0;
  double expected_period = 0.0;
};

// Electric walk with A0 = 0, A1 = -E j eps; packet in the upper band of the zero-field walk.
BlochResult bloch_oscillation(const BlochConfig& c);

struct DriftConfig {
  int sites = 256;
  int steps = 400;
  int flux_quanta = 2;   // B = 2 pi flux_quanta / sites keeps the Landau gauge periodic
  double e_over_b = 0.25;
  double width = 6.0;
  double delta_theta = 0.0;
};

struct DriftResult {
  std::vector<double> x, y;
  double vx = 0.0, vy = 0.0, speed = 0.0;
  double expected = 0.0;
  double E = 0.0, B = 0.0;
};

// 2D walk in crossed fields, A1 = -E t (temporal gauge), A2 = -B x, lattice units.
DriftResult exb_drift(const DriftConfig& c);

struct FluxConfig {
  int sites = 512;
  int steps = 200;
  double flux = 0.25;          // b / 2pi per plaquette
  double width = 6.0;
  double perturbation = 0.0;   // added to the up component at the packet centre
};

// Participation ratio after `steps` of the 2D walk with Delta xi^(2) = 2 pi flux (p1 - sites / 2).
double flux_spreading(const FluxConfig& c);

}  // namespace qw
