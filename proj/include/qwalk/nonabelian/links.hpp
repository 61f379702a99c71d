#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qwalk/core/lattice.hpp"

namespace qw {

// N x N complex matrix per (time slice, site) on a 1D periodic lattice.
class MatrixNodeField {
 public:
  MatrixNodeField() = default;
  // Every entry starts as the identity.
  MatrixNodeField(Lattice lat, int times, int n);

  const Lattice& lattice() const { return lat_; }
  int times() const { return times_; }
  int dim() const { return n_; }

  Eigen::MatrixXcd& operator()(int j, std::size_t site);
  const Eigen::MatrixXcd& operator()(int j, std::size_t site) const;
  Eigen::MatrixXcd& at(int j, long p) { return (*this)(j, lat_.index(p)); }
  const Eigen::MatrixXcd& at(int j, long p) const { return (*this)(j, lat_.index(p)); }

  void set_zero();

 private:
  Lattice lat_;
  int times_ = 0;
  int n_ = 0;
  std::vector<Eigen::MatrixXcd> m_;
};

// b_mu = eps B_mu, Hermitian N x N per node.
struct NonAbelianGaugeField {
  NonAbelianGaugeField() = default;
  NonAbelianGaugeField(Lattice lat, int times, int n, double eps);

  int dim() const { return b0.dim(); }
  int times() const { return b0.times(); }
  const Lattice& lattice() const { return b0.lattice(); }
  // Throws std::invalid_argument when b0 or b1 is not Hermitian within tol.
  void validate(double tol = 1e-12) const;

  double eps = 1.0;
  MatrixNodeField b0, b1;
};

// U_+- = exp[i (b0 +- b1)] at one time slice, one matrix per site.
struct GroupLinkPair {
  std::vector<Eigen::MatrixXcd> plus, minus;
};

GroupLinkPair link_exponentials(const NonAbelianGaugeField& g, int j);

// Unitary G per (time, site).
using GaugeGroupField = MatrixNodeField;

// U'_{+-, j, p} = G_{j+1, p} U_{+-, j, p} G^{-1}_{j, p +- 1}
GroupLinkPair gauge_transform_links(const GroupLinkPair& links, const GaugeGroupField& g, int j);

// Psi' = (1_2 (x) G_j) Psi
SpinorField gauge_rotate(const SpinorField& psi, const GaugeGroupField& g, int j);

// Haar-like random unitary (QR of a complex Gaussian matrix with phase-fixed R).
template <class Rng>
Eigen::MatrixXcd random_unitary(int n, Rng& rng);

// Random Hermitian matrix with entries of order `scale`.
template <class Rng>
Eigen::MatrixXcd random_hermitian(int n, double scale, Rng& rng);

}  // namespace qw

#include "qwalk/nonabelian/random_impl.hpp"
