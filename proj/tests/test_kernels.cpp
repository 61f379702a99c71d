#include <random>

#include "doctest.h"
#include "qwalk/core/coin.hpp"
#include "qwalk/core/evolve.hpp"
#include "qwalk/core/kernels.hpp"

using namespace qw;

namespace {

struct KernelGuard {
  KernelKind saved = active_kernel();
  ~KernelGuard() { set_kernel(saved); }
};

SpinorField run(KernelKind k, const SpinorField& f, const CoinField& coins, int axis, int steps) {
  set_kernel(k);
  SpinorField g = f;
  for (int j = 0; j < steps; ++j) g = step(g, coins, axis);
  return g;
}

}  // namespace

TEST_CASE("scalar kernel is always available") {
  CHECK(kernel_available(KernelKind::scalar));
  CHECK(std::string(kernel_name(KernelKind::avx2)) == "avx2");
}

TEST_CASE("unavailable kernels are rejected") {
  KernelGuard g;
  for (KernelKind k : {KernelKind::avx2, KernelKind::neon})
    if (!kernel_available(k)) CHECK_THROWS_AS(set_kernel(k), std::runtime_error);
}

TEST_CASE("vector kernels agree with the scalar kernel") {
  KernelGuard guard;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> u(-pi, pi);
  for (KernelKind k : {KernelKind::avx2, KernelKind::neon}) {
    if (!kernel_available(k)) continue;
    CAPTURE(kernel_name(k));
    for (int dims = 1; dims <= 2; ++dims) {
      const Lattice l = dims == 1 ? Lattice::line(257) : Lattice::square(33, 17);
      SpinorField f(l, 2);
      for (auto& z : f.amplitudes()) z = {nd(rng), nd(rng)};
      const CoinField per_site = coin_field(l, [&](std::size_t) { return build_coin_euler({u(rng), u(rng), u(rng), u(rng)}); });
      const CoinField uniform{build_coin_euler({0.2, 0.9, -1.0, 0.4})};
      for (int axis = 0; axis < dims; ++axis)
        for (const CoinField* c : {&per_site, &uniform}) {
          const SpinorField a = run(KernelKind::scalar, f, *c, axis, 10);
          const SpinorField b = run(k, f, *c, axis, 10);
          CHECK(max_abs_diff(a, b) < 1e-14);
        }
    }
  }
}
