#pragma once

#include <array>

#include "qwalk/core/coin.hpp"

namespace qw {

// k reduced modulo 2pi into [-pi, pi).
double reduce_quasimomentum(double k);

// U(angles) diag(e^{ik}, e^{-ik}): the one-step operator restricted to the plane wave e^{ikp}.
Mat2 walk_operator_fourier(double k, const CoinAngles& angles);

struct Dispersion {
  double plus = 0.0;
  double minus = 0.0;
};

// E = +-2 atan2(sqrt(1 - c^2), 1 + c), c = cos(theta) cos(k + xi). The pole c = -1 maps to +-pi.
Dispersion dispersion(double theta, double xi, double k);

// Eigenvalues of a 2x2 matrix, ordered by decreasing argument.
std::array<cplx, 2> eigenvalues(const Mat2& m);

}  // namespace qw
