#pragma once

#include <array>
#include <vector>

#include "qwalk/curved/metric.hpp"

namespace qw {

// Flat gammas of the (1+2)D walk: gamma^0 = sigma_1, gamma^1 = i sigma_2, gamma^2 = i sigma_3.
Mat2 flat_gamma(int a);
// S^{ab} = [gamma^a, gamma^b] / 4
Mat2 spin_generator(int a, int b);

struct ConnectionNode {
  // omega[a][b] = g_{alpha beta} E_a^beta (d_mu E_b^alpha + Gamma^alpha_{mu nu} E_b^nu)
  std::array<std::array<double, 3>, 3> omega{};
  Mat2 gamma;  // (1/2) omega_{ab} S^{ab}, summed over all a, b
};

// Coordinates (T, X, Y), mu in {0, 1, 2}. Derivatives are centred differences, periodic in space; in
// time they are one-sided at the first and last slice and zero for single-slice data.
std::vector<ConnectionNode> spin_connection(const MetricField2D& g, const Triad& t, int mu, int j, double dt = 1.0,
                                            double dx = 1.0);

}  // namespace qw
