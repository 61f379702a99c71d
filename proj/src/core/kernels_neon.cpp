#include <arm_neon.h>

#include "qwalk/core/kernels.hpp"

namespace qw::kernels {

namespace {

inline float64x2_t cmul(float64x2_t x, float64x2_t y) {
  const float64x2_t xr = vdupq_laneq_f64(x, 0);
  const float64x2_t xi = vdupq_laneq_f64(x, 1);
  const float64x2_t ysw = vextq_f64(y, y, 1);
  const float64x2_t t1 = vmulq_f64(xr, y);
  const float64x2_t t2 = vmulq_f64(xi, ysw);
  const float64x2_t sign = {-1.0, 1.0};
  return vaddq_f64(t1, vmulq_f64(t2, sign));
}

inline float64x2_t load(const cplx* z) { return vld1q_f64(reinterpret_cast<const double*>(z)); }

}  // namespace

void shift_coin_neon(const ShiftCoinArgs& a) {
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
      const Mat2& m = a.coins[s * a.coin_step];
      const float64x2_t u = load(&a.in[2 * (bp + i)]);
      const float64x2_t d = load(&a.in[2 * (bm + i) + 1]);
      const float64x2_t up = vaddq_f64(cmul(load(&m.a), u), cmul(load(&m.b), d));
      const float64x2_t dn = vaddq_f64(cmul(load(&m.c), u), cmul(load(&m.d), d));
      vst1q_f64(reinterpret_cast<double*>(&a.out[2 * s]), up);
      vst1q_f64(reinterpret_cast<double*>(&a.out[2 * s + 1]), dn);
    }
  }
}

}  // namespace qw::kernels
