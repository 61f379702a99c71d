#pragma once

#include "qwalk/core/types.hpp"

namespace qw {

// Euler parameters of a U(2) coin.
struct CoinAngles {
  double alpha = 0.0;
  double theta = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
};

// e^{i alpha} [[e^{i xi} cos t, e^{i zeta} sin t], [-e^{-i zeta} sin t, e^{-i xi} cos t]]
Mat2 build_coin_euler(const CoinAngles& q);

// Representative of the same matrix in [0,pi) x [0,pi/2] x [0,2pi)^2.
// At theta = 0 zeta is set to 0, at theta = pi/2 xi is set to 0.
CoinAngles canonicalize(const CoinAngles& q);

// Euler angles of an arbitrary 2x2 unitary (canonical representative).
CoinAngles euler_angles(const Mat2& u);

// C(theta) = [[cos, i sin], [i sin, cos]] = exp(i theta sigma_1)
Mat2 standard_coin(double theta);
// F(omega) = diag(e^{i omega}, e^{-i omega}) = exp(i omega sigma_3)
Mat2 phase_shift(double omega);
// exp(i theta sigma_2) = [[cos, sin], [-sin, cos]]
Mat2 rotation_sigma2(double theta);
// (1/sqrt 2) [[1, 1], [1, -1]]
Mat2 hadamard();

// Pauli-vector helpers: m = v0 sigma_1 + v1 sigma_2 + v2 sigma_3.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};
Mat2 pauli(const Vec3& v);
// Components of the traceless Hermitian part of m along the Pauli matrices.
Vec3 pauli_components(const Mat2& m);

}  // namespace qw
