#include "qwalk/abelian/electric.hpp"

#include <cmath>

namespace qw {

CoinField electric_coins(const AbelianGaugeField& a, int j, double mass, double eps_m) {
  const Lattice& lat = a.lattice();
  if (lat.dims() != 1) throw ShapeError("electric walk needs a 1D gauge field");
  const Mat2 c = standard_coin(-eps_m * mass);
  CoinField coins(lat.sites());
  for (std::size_t s = 0; s < coins.size(); ++s) {
    const double alpha = a.eps * a[0](j, s);
    coins[s] = cplx{std::cos(alpha), std::sin(alpha)} * (c * phase_shift(-a.eps * a[1](j, s)));
  }
  return coins;
}

SpinorField electric_step_1d(const SpinorField& psi, const AbelianGaugeField& a, double mass, double eps_m, int j) {
  if (psi.lattice() != a.lattice()) throw ShapeError("field and gauge lattice differ");
  const CoinField coins = electric_coins(a, j, mass, eps_m);
  return step(psi, coins, 0);
}

}  // namespace qw
