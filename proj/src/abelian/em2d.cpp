#include "qwalk/abelian/em2d.hpp"

#include <cmath>

namespace qw {

Em2dCoins em2d_coins(const AbelianGaugeField& a, int j, double delta_theta) {
  const Lattice& lat = a.lattice();
  if (lat.dims() != 2) throw ShapeError("electromagnetic walk needs a 2D gauge field");
  const Mat2 cp = standard_coin(f_plus(delta_theta));
  const Mat2 cm = standard_coin(f_minus(delta_theta));
  Em2dCoins c;
  c.first.resize(lat.sites());
  c.second.resize(lat.sites());
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    const double alpha = a.eps * a[0](j, s);
    c.first[s] = cp * phase_shift(-a.eps * a[1](j, s));
    c.second[s] = cplx{std::cos(alpha), std::sin(alpha)} * (cm * phase_shift(-a.eps * a[2](j, s)));
  }
  return c;
}

SpinorField em_step_2d(const SpinorField& psi, const Em2dCoins& coins, SpinorField* half) {
  SpinorField mid = step(psi, coins.first, 0);
  SpinorField out = step(mid, coins.second, 1);
  if (half) *half = std::move(mid);
  return out;
}

SpinorField em_step_2d(const SpinorField& psi, const AbelianGaugeField& a, double delta_theta, int j, SpinorField* half) {
  if (psi.lattice() != a.lattice()) throw ShapeError("field and gauge lattice differ");
  return em_step_2d(psi, em2d_coins(a, j, delta_theta), half);
}

Mat2 em2d_operator_fourier(double k1, double k2, double delta_theta) {
  return standard_coin(f_minus(delta_theta)) * phase_shift(k2) * standard_coin(f_plus(delta_theta)) * phase_shift(k1);
}

}  // namespace qw
