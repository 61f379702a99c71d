#pragma once

#include <vector>

#include "qwalk/core/lattice.hpp"

namespace qw {

// Sign of the spatial current, J1 = s (|down|^2 - |up|^2). Fixed by a brute-force calibration test.
inline constexpr int current_sign = +1;

struct CurrentSlice {
  std::vector<double> j0, j1, j2;
};

// 1D: J0 = |up|^2 + |down|^2, J1 = s (|down|^2 - |up|^2). Fields with 2N components are read
// spin-major and summed over the N internal colours, which gives the colour-singlet current of the
// U(N) walk.
CurrentSlice lattice_current_1d(const SpinorField& psi, int sign = current_sign);
// max |d0 J0 + d1 J1| between two consecutive states of the 1D walk.
double continuity_residual_1d(const SpinorField& psi, const SpinorField& next, double eps, int sign = current_sign);

// 2D: J1 = Sigma_2 (|down|^2 - |up|^2) of Psi_j, J2 = |down|^2 - |up|^2 of the state after the first
// spatial factor. Continuity: J0_{j+1} - Sigma_1 Sigma_2 J0_j + Delta_1 J1 + Delta_2 J2 = 0.
CurrentSlice lattice_current_2d(const SpinorField& psi, const SpinorField& half);
double continuity_residual_2d(const SpinorField& psi, const SpinorField& half, const SpinorField& next, double eps);

}  // namespace qw
