#pragma once

#include "qwalk/core/evolve.hpp"
#include "qwalk/curved/metric.hpp"

namespace qw {

// Coins of the (1+2)D walk at one node. Even time steps use (first_even, second_even), odd ones the
// odd pair; each step is [second S2][first S1]. Over one even+odd pair the generator of k1 is
// 2 (E1 sigma_3 - B sigma_2) / c and that of k2 is 2 (B sigma_3 - E2 sigma_2) / c, so one lattice step
// advances the continuum time by eps / c. `headroom` c >= 1 keeps |X|, |Y| <= 1 for triads above 1.
struct CurvedCoins {
  Mat2 first_even, second_even, first_odd, second_odd;
};

// The generators come out in a rotated spinor frame: the two-step operator equals F W_target F^dagger with
// F = curved_frame_1p2(t). Densities are unaffected; the target-frame field is F^dagger Psi.
Mat2 curved_frame_1p2(const TriadValue& t, double headroom = 1.0);

// Throws std::invalid_argument when the rescaled triad leaves the walk's light cone.
CurvedCoins curved_coins_1p2(const TriadValue& t, double delta_theta, double headroom = 1.0);

// One lattice step at time j (parity selects the coin pair). A single-slice triad is static.
// delta_theta = -eps m carries the mass as in the flat electromagnetic walk.
SpinorField curved_step_1p2(const SpinorField& psi, const Triad& triad, double delta_theta, int j,
                            double headroom = 1.0);

// Per-site coins of one triad slice, for long runs on a static geometry.
struct CurvedCoinField {
  CoinField first_even, second_even, first_odd, second_odd;
};
CurvedCoinField curved_coin_field(const Triad& triad, int slice, double delta_theta, double headroom = 1.0);
SpinorField curved_step_1p2(const SpinorField& psi, const CurvedCoinField& coins, int j);

// Even+odd pair on the plane wave e^{i(k1 p1 + k2 p2)} for a homogeneous triad.
Mat2 curved_two_step_fourier(double k1, double k2, const CurvedCoins& c);

// Psi = (det G)^{1/4} Phi and back, at time slice j (single-slice metrics are static).
SpinorField density_weight(const SpinorField& phi, const MetricField2D& g, int j);
SpinorField density_unweight(const SpinorField& psi, const MetricField2D& g, int j);

}  // namespace qw
