#include "qwalk/core/evolve.hpp"

#include "qwalk/core/kernels.hpp"

namespace qw {

CoinField uniform_coins(const Lattice& lat, const Mat2& u) { return CoinField(lat.sites(), u); }

CoinField coin_field(const Lattice& lat, const std::function<Mat2(std::size_t)>& f) {
  CoinField c(lat.sites());
  for (std::size_t s = 0; s < c.size(); ++s) c[s] = f(s);
  return c;
}

namespace {

void check_axis(const Lattice& lat, int axis) {
  if (axis < 0 || axis >= lat.dims()) throw ShapeError("axis out of range");
}

void check_coins(const SpinorField& f, std::span<const Mat2> coins) {
  if (f.internal_dim() != 2) throw ShapeError("coin step requires internal dimension 2");
  if (coins.size() != 1 && coins.size() != f.lattice().sites())
    throw ShapeError("coin field has " + std::to_string(coins.size()) + " entries, lattice has " +
                     std::to_string(f.lattice().sites()) + " sites");
}

}  // namespace

SpinorField shift(const SpinorField& f, int axis, int direction) {
  const Lattice& lat = f.lattice();
  check_axis(lat, axis);
  if (direction != 1 && direction != -1) throw std::invalid_argument("shift direction must be +1 or -1");
  SpinorField out(lat, f.internal_dim());
  const int k = f.internal_dim(), half = k / 2;
  const long sites = static_cast<long>(lat.sites());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < sites; ++s) {
    const auto site = static_cast<std::size_t>(s);
    const std::size_t from_up = lat.neighbour(site, axis, direction);
    const std::size_t from_dn = lat.neighbour(site, axis, -direction);
    for (int c = 0; c < half; ++c) out.at(site, c) = f.at(from_up, c);
    for (int c = half; c < k; ++c) out.at(site, c) = f.at(from_dn, c);
  }
  return out;
}

void step_into(const SpinorField& in, SpinorField& out, std::span<const Mat2> coins, int axis) {
  const Lattice& lat = in.lattice();
  check_axis(lat, axis);
  check_coins(in, coins);
  if (!in.same_shape(out)) throw ShapeError("output field shape mismatch");
  kernels::ShiftCoinArgs a;
  a.in = in.data();
  a.out = out.data();
  a.coins = coins.data();
  a.coin_step = coins.size() == 1 ? 0 : 1;
  a.inner = lat.stride(axis);
  a.n = static_cast<std::size_t>(lat.extent(axis));
  a.outer = lat.sites() / (a.n * a.inner);
  kernels::shift_coin(a);
}

SpinorField step(const SpinorField& f, std::span<const Mat2> coins, int axis) {
  SpinorField out(f.lattice(), f.internal_dim());
  step_into(f, out, coins, axis);
  return out;
}

SpinorField step(const SpinorField& f, const Mat2& coin, int axis) {
  return step(f, std::span<const Mat2>(&coin, 1), axis);
}

void apply_coins(SpinorField& f, std::span<const Mat2> coins) {
  check_coins(f, coins);
  const bool uniform = coins.size() == 1;
  const long sites = static_cast<long>(f.lattice().sites());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < sites; ++s) {
    const auto site = static_cast<std::size_t>(s);
    const Mat2& m = coins[uniform ? 0 : site];
    const cplx u = f.at(site, 0), d = f.at(site, 1);
    f.at(site, 0) = m.a * u + m.b * d;
    f.at(site, 1) = m.c * u + m.d * d;
  }
}

}  // namespace qw
