#include "qwalk/nonabelian/field_strength.hpp"

namespace qw {

std::vector<Eigen::MatrixXcd> lattice_field_strength_covariant(const GroupLinkPair& at_j, const GroupLinkPair& at_j1) {
  const std::size_t n = at_j.plus.size();
  if (at_j.minus.size() != n || at_j1.plus.size() != n || at_j1.minus.size() != n)
    throw ShapeError("field strength stencil needs links on two full time slices");
  std::vector<Eigen::MatrixXcd> f(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t pp = (p + 1) % n, pm = (p + n - 1) % n;
    const Eigen::MatrixXcd right = at_j1.plus[p] * at_j.minus[pp];
    const Eigen::MatrixXcd left = at_j1.minus[p] * at_j.plus[pm];
    f[p] = right * left.adjoint();
  }
  return f;
}

Eigen::MatrixXcd extract_field_strength(const Eigen::MatrixXcd& f, double eps) {
  const std::complex<double> denom{0.0, -2.0 * eps * eps};
  return (f - Eigen::MatrixXcd::Identity(f.rows(), f.cols())) / denom;
}

}  // namespace qw
