#pragma once

#include "qwalk/abelian/gauge_field.hpp"
#include "qwalk/core/evolve.hpp"

namespace qw {

// f+- = +-pi/4 + delta_theta / 2
inline double f_plus(double delta_theta) { return 0.25 * pi + 0.5 * delta_theta; }
inline double f_minus(double delta_theta) { return -0.25 * pi + 0.5 * delta_theta; }

struct Em2dCoins {
  CoinField first;   // after S1: C(f+) F(-eps A1)
  CoinField second;  // after S2: e^{i eps A0} C(f-) F(-eps A2)
};

Em2dCoins em2d_coins(const AbelianGaugeField& a, int j, double delta_theta);

// W = e^{i eps A0} [C(f-) F(-eps A2) S2] [C(f+) F(-eps A1) S1].
// When `half` is given it receives the state after the first factor.
SpinorField em_step_2d(const SpinorField& psi, const AbelianGaugeField& a, double delta_theta, int j,
                       SpinorField* half = nullptr);
// Same with precomputed coins, used by long runs.
SpinorField em_step_2d(const SpinorField& psi, const Em2dCoins& coins, SpinorField* half = nullptr);

// Free operator on the plane wave e^{i(k1 p1 + k2 p2)}: C(f-) F(k2) C(f+) F(k1).
Mat2 em2d_operator_fourier(double k1, double k2, double delta_theta);

}  // namespace qw
