#pragma once

#include <vector>

#include "qwalk/core/evolve.hpp"

namespace qw {

// Coins for j = 0 .. j_max-1; each entry is a uniform coin (size 1) or one per site.
using CoinEvolution = std::vector<CoinField>;

// Shift-then-coin evolution: Psi_{j+1} = U_j S Psi_j.
SpinorField evolve_shift_first(SpinorField psi, const CoinEvolution& ev, int axis = 0);
// Coin-then-shift with reversed transport: Psi_{r+1} = S^{-1} V_r Psi_r.
SpinorField evolve_coin_first(SpinorField psi, const CoinEvolution& ev, int axis = 0);

// Coin-first evolution that undoes `ev`: V_r = (U_{j_max-1-r})^dagger.
// evolve_coin_first(evolve_shift_first(psi, ev), convert_convention(ev)) == psi.
CoinEvolution convert_convention(const CoinEvolution& ev);

}  // namespace qw
