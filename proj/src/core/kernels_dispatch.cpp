#include <atomic>
#include <stdexcept>
#include <string>

#include "qwalk/core/kernels.hpp"

namespace qw {

namespace {

KernelKind detect() {
#if defined(QW_BUILD_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return KernelKind::avx2;
#endif
#if defined(QW_BUILD_NEON)
  return KernelKind::neon;
#endif
  return KernelKind::scalar;
}

std::atomic<int>& current() {
  static std::atomic<int> k{static_cast<int>(detect())};
  return k;
}

}  // namespace

const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::scalar: return "scalar";
    case KernelKind::avx2: return "avx2";
    case KernelKind::neon: return "neon";
  }
  return "unknown";
}

bool kernel_available(KernelKind k) {
  switch (k) {
    case KernelKind::scalar: return true;
    case KernelKind::avx2:
#if defined(QW_BUILD_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case KernelKind::neon:
#if defined(QW_BUILD_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

KernelKind active_kernel() { return static_cast<KernelKind>(current().load()); }

void set_kernel(KernelKind k) {
  if (!kernel_available(k)) throw std::runtime_error(std::string("kernel not available: ") + kernel_name(k));
  current().store(static_cast<int>(k));
}

namespace kernels {

void shift_coin(const ShiftCoinArgs& a) {
  switch (active_kernel()) {
#if defined(QW_BUILD_AVX2)
    case KernelKind::avx2: shift_coin_avx2(a); return;
#endif
#if defined(QW_BUILD_NEON)
    case KernelKind::neon: shift_coin_neon(a); return;
#endif
    default: shift_coin_scalar(a); return;
  }
}

}  // namespace kernels
}  // namespace qw
