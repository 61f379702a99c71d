#pragma once

#include <random>

namespace qw {

template <class Rng>
Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) z(i, k) = {nd(rng), nd(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const std::complex<double> d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

template <class Rng>
Eigen::MatrixXcd random_hermitian(int n, double scale, Rng& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) z(i, k) = {nd(rng), nd(rng)};
  return 0.5 * scale * (z + z.adjoint());
}

}  // namespace qw
