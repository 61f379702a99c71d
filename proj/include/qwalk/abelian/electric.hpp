#pragma once

#include "qwalk/abelian/gauge_field.hpp"
#include "qwalk/core/evolve.hpp"

namespace qw {

// Per-site coins of the 1D electric walk at time j:
//   e^{i eps A0} C(-eps_m m) F(-eps A1)
CoinField electric_coins(const AbelianGaugeField& a, int j, double mass, double eps_m);

// W = e^{i eps A0} C(-eps_m m) F(-eps A1) S on a 1D lattice.
SpinorField electric_step_1d(const SpinorField& psi, const AbelianGaugeField& a, double mass, double eps_m, int j);

}  // namespace qw
