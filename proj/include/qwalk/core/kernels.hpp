#pragma once

#include <cstddef>

#include "qwalk/core/types.hpp"

namespace qw {

enum class KernelKind { scalar, avx2, neon };

const char* kernel_name(KernelKind k);
bool kernel_available(KernelKind k);
// Best available kernel on this CPU, chosen once at first use.
KernelKind active_kernel();
// Force a kernel (throws std::runtime_error when unavailable). Intended for tests and benchmarks.
void set_kernel(KernelKind k);

namespace kernels {

// Fused spin-dependent shift and site coin for 2-component fields.
// Sites are addressed as (o * n + p) * inner + i with p the coordinate along the shifted axis.
//   up(site)   <- in_up(p + 1)
//   down(site) <- in_down(p - 1)
//   out(site)  =  coin(site) * (up, down)
// coin_step is 0 for a single uniform coin and 1 for one coin per site.
struct ShiftCoinArgs {
  const cplx* in = nullptr;
  cplx* out = nullptr;
  const Mat2* coins = nullptr;
  std::size_t coin_step = 0;
  std::size_t outer = 1;
  std::size_t n = 0;
  std::size_t inner = 1;
};

void shift_coin_scalar(const ShiftCoinArgs& a);
#if defined(QW_BUILD_AVX2)
void shift_coin_avx2(const ShiftCoinArgs& a);
#endif
#if defined(QW_BUILD_NEON)
void shift_coin_neon(const ShiftCoinArgs& a);
#endif

void shift_coin(const ShiftCoinArgs& a);

}  // namespace kernels
}  // namespace qw
