#include "qwalk/core/convention.hpp"

namespace qw {

SpinorField evolve_shift_first(SpinorField psi, const CoinEvolution& ev, int axis) {
  SpinorField tmp(psi.lattice(), psi.internal_dim());
  for (const auto& coins : ev) {
    step_into(psi, tmp, coins, axis);
    std::swap(psi, tmp);
  }
  return psi;
}

SpinorField evolve_coin_first(SpinorField psi, const CoinEvolution& ev, int axis) {
  for (const auto& coins : ev) {
    apply_coins(psi, coins);
    psi = shift(psi, axis, -1);
  }
  return psi;
}

CoinEvolution convert_convention(const CoinEvolution& ev) {
  CoinEvolution out;
  out.reserve(ev.size());
  for (auto it = ev.rbegin(); it != ev.rend(); ++it) {
    CoinField c(it->size());
    for (std::size_t s = 0; s < c.size(); ++s) c[s] = dagger((*it)[s]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qw
