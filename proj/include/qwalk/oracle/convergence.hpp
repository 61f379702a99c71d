#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qwalk/core/lattice.hpp"
#include "qwalk/oracle/dirac.hpp"

namespace qw {

struct ConvergenceReport {
  std::vector<double> eps;     // strictly decreasing
  std::vector<double> errors;  // relative L2
  double order = 0.0;          // slope of log(error) against log(eps)
  double r2 = 0.0;
};

// Least-squares fit of log(error) = order * log(eps) + c. Throws on fewer than 3 points,
// non-decreasing eps or non-positive errors.
ConvergenceReport fit_order(std::vector<double> eps, std::vector<double> errors);

// Runs error_for(eps) for each eps and fits the order.
ConvergenceReport convergence_order(const std::function<double(double)>& error_for, const std::vector<double>& eps);

// 1D walk on a periodic box of physical length `length` with spacing eps, coin at step j
//   e^{i eps A0} C(-eps m) F(-eps A1(j eps)),  A1(t) = a1 - E t  (temporal gauge for a constant field E)
// compared with the spectral oracle at time T.
struct DiracWalkCase {
  double mass = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  double e_field = 0.0;
  double length = 16.0;
  double time = 1.0;
  // Smooth periodic initial data; a Gaussian packet by default.
  std::function<std::array<cplx, 2>(double x)> initial;
};

std::array<cplx, 2> default_initial_packet(double x, double length);

SpinorField sample_initial(const DiracWalkCase& c, double eps);
SpinorField run_dirac_walk(const DiracWalkCase& c, double eps);
UniformPotential case_potential(const DiracWalkCase& c);

// ||walk - oracle|| / ||oracle|| on the lattice sites at time c.time.
double walk_oracle_error(const DiracWalkCase& c, double eps);

ConvergenceReport convergence_order(const DiracWalkCase& c, const std::vector<double>& eps);

double relative_l2(const SpinorField& x, const SpinorField& ref);

}  // namespace qw
