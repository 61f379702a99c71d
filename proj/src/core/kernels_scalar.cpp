#include "qwalk/core/kernels.hpp"

namespace qw::kernels {

namespace {

// Written out so the vector kernels can reproduce the same rounding sequence.
inline cplx cmul(const cplx& x, const cplx& y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

}  // namespace

void shift_coin_scalar(const ShiftCoinArgs& a) {
  const std::size_t n = a.n, inner = a.inner;
  const long rows = static_cast<long>(a.outer * n);
#pragma omp parallel for schedule(static)
  for (long r = 0; r < rows; ++r) {
    const std::size_t o = static_cast<std::size_t>(r) / n, p = static_cast<std::size_t>(r) % n;
    const std::size_t pp = p + 1 == n ? 0 : p + 1;
    const std::size_t pm = p == 0 ? n - 1 : p - 1;
    const std::size_t base = (o * n + p) * inner, bp = (o * n + pp) * inner, bm = (o * n + pm) * inner;
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t s = base + i;
      const cplx u = a.in[2 * (bp + i)];
      const cplx d = a.in[2 * (bm + i) + 1];
      const Mat2& m = a.coins[s * a.coin_step];
      const cplx up = cmul(m.a, u), ud = cmul(m.b, d), lu = cmul(m.c, u), ld = cmul(m.d, d);
      a.out[2 * s] = {up.real() + ud.real(), up.imag() + ud.imag()};
      a.out[2 * s + 1] = {lu.real() + ld.real(), lu.imag() + ld.imag()};
    }
  }
}

}  // namespace qw::kernels
