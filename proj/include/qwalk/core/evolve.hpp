#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qwalk/core/coin.hpp"
#include "qwalk/core/lattice.hpp"

namespace qw {

// One coin per lattice site, site-major.
using CoinField = std::vector<Mat2>;

CoinField uniform_coins(const Lattice& lat, const Mat2& u);
CoinField coin_field(const Lattice& lat, const std::function<Mat2(std::size_t site)>& f);

// Spin-dependent shift along `axis`. direction = +1 moves the upper half of the internal
// index one site towards -p and the lower half towards +p; direction = -1 is the inverse.
SpinorField shift(const SpinorField& f, int axis = 0, int direction = +1);

// Shift then coin: out(site) = U(site) (S_axis f)(site). Requires internal_dim == 2.
// `coins` holds either one entry (uniform) or one per site.
SpinorField step(const SpinorField& f, std::span<const Mat2> coins, int axis = 0);
SpinorField step(const SpinorField& f, const Mat2& coin, int axis = 0);
// Allocation-free variant; `out` must have the shape of `in` and must not alias it.
void step_into(const SpinorField& in, SpinorField& out, std::span<const Mat2> coins, int axis = 0);

// Site-local coin only, no transport.
void apply_coins(SpinorField& f, std::span<const Mat2> coins);

}  // namespace qw
