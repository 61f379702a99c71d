#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qwalk/abelian/gauge_field.hpp"
#include "qwalk/core/lattice.hpp"

namespace qw {

// Spatially constant potential, optionally time dependent. Empty functions mean the constants.
struct UniformPotential {
  double a0 = 0.0, a1 = 0.0;
  std::function<double(double)> a0_of_t, a1_of_t;

  bool time_dependent() const { return static_cast<bool>(a0_of_t) || static_cast<bool>(a1_of_t); }
  double A0(double t) const { return a0_of_t ? a0_of_t(t) : a0; }
  double A1(double t) const { return a1_of_t ? a1_of_t(t) : a1; }
};

// d_t psi = sigma_3 (d_x - i A1) psi + i A0 psi - i m sigma_1 psi, periodic in x.
// Each Fourier mode e^{iKx} evolves with exp(i H T), H = (K - A1) sigma_3 + A0 - m sigma_1.
// `psi` holds samples at x_p = p dx; the period is sites * dx.
// Constant potentials use the exact exponential; time-dependent ones a fourth-order Magnus
// integrator with steps of at most max_dt. T may be negative.
SpinorField dirac_evolve_spectral(const SpinorField& psi, double dx, double mass, const UniformPotential& a, double T,
                                  double t0 = 0.0, double max_dt = 1e-3);

// Symbol of the Dirac operator for one mode at time t.
Mat2 dirac_symbol(double k, double mass, double a0, double a1);

// exp(i M) for Hermitian 2x2 M.
Mat2 expi_hermitian2(const Mat2& m);

// Converts a lattice gauge field to a UniformPotential, interpolating linearly between slices
// (t = j * eps). Throws std::invalid_argument if any slice varies in space.
UniformPotential uniform_potential(const AbelianGaugeField& a);

// psi(x, t) = chi e^{i (K x + E t)} with H chi = E chi.
struct PlaneWaveSolution {
  double mass = 0.0, k = 0.0, a0 = 0.0, a1 = 0.0;
  cplx up{1.0, 0.0}, down{0.0, 0.0};
  double energy = 0.0;

  std::array<cplx, 2> operator()(double x, double t) const;
};

// branch = +1 picks E = A0 + sqrt((K - A1)^2 + m^2), -1 the other root.
PlaneWaveSolution plane_wave(double mass, double k, int branch, double a0 = 0.0, double a1 = 0.0);

// Max modulus of d_t psi minus the right-hand side at (x, t), with derivatives taken analytically.
double dirac_residual(const PlaneWaveSolution& w, double x, double t);

}  // namespace qw
