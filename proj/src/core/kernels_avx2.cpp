#include <immintrin.h>

#include "qwalk/core/kernels.hpp"

namespace qw::kernels {

namespace {

// Two complex products per call: [x0*y0, x1*y1], same operation order as the scalar path.
inline __m256d cmul2(__m256d x, __m256d y) {
  const __m256d xr = _mm256_movedup_pd(x);
  const __m256d xi = _mm256_permute_pd(x, 0xF);
  const __m256d ysw = _mm256_permute_pd(y, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(xr, y), _mm256_mul_pd(xi, ysw));
}

inline __m256d load_pair(const cplx* lo, const cplx* hi) {
  return _mm256_set_m128d(_mm_loadu_pd(reinterpret_cast<const double*>(hi)),
                          _mm_loadu_pd(reinterpret_cast<const double*>(lo)));
}

inline __m256d dup(const cplx* z) {
  const __m128d v = _mm_loadu_pd(reinterpret_cast<const double*>(z));
  return _mm256_set_m128d(v, v);
}

}  // namespace

void shift_coin_avx2(const ShiftCoinArgs& a) {
  const std::size_t n = a.n, inner = a.inner;
  const long rows = static_cast<long>(a.outer * n);
  const bool uniform = a.coin_step == 0;
  const __m256d ucol0 = load_pair(&a.coins[0].a, &a.coins[0].c);
  const __m256d ucol1 = load_pair(&a.coins[0].b, &a.coins[0].d);
#pragma omp parallel for schedule(static)
  for (long r = 0; r < rows; ++r) {
    const std::size_t o = static_cast<std::size_t>(r) / n, p = static_cast<std::size_t>(r) % n;
    const std::size_t pp = p + 1 == n ? 0 : p + 1;
    const std::size_t pm = p == 0 ? n - 1 : p - 1;
    const std::size_t base = (o * n + p) * inner, bp = (o * n + pp) * inner, bm = (o * n + pm) * inner;
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t s = base + i;
      __m256d col0 = ucol0, col1 = ucol1;
      if (!uniform) {
        const Mat2& m = a.coins[s];
        col0 = load_pair(&m.a, &m.c);
        col1 = load_pair(&m.b, &m.d);
      }
      const __m256d u = dup(&a.in[2 * (bp + i)]);
      const __m256d d = dup(&a.in[2 * (bm + i) + 1]);
      const __m256d res = _mm256_add_pd(cmul2(col0, u), cmul2(col1, d));
      _mm256_storeu_pd(reinterpret_cast<double*>(&a.out[2 * s]), res);
    }
  }
}

}  // namespace qw::kernels
