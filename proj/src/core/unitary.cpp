#include "qwalk/core/unitary.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace qw {

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const auto n = u.cols();
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Eigen::MatrixXcd& h) { return (h - h.adjoint()).cwiseAbs().maxCoeff(); }

FactorizedUnitary factor_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) throw std::invalid_argument("factor_unitary: matrix must be square");
  const double defect = unitarity_defect(u);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "factor_unitary: input is not unitary, ||U^dagger U - 1|| = " << defect;
    throw std::invalid_argument(msg.str());
  }
  const double n = static_cast<double>(u.rows());
  double omega = std::arg(u.determinant());
  if (omega < 0.0) omega += 2.0 * M_PI;
  if (omega >= 2.0 * M_PI) omega -= 2.0 * M_PI;
  const std::complex<double> delta = std::polar(1.0, omega / n);
  return {omega, u / delta};
}

Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto& v = es.eigenvectors();
  Eigen::VectorXcd ph(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) ph(i) = std::polar(1.0, es.eigenvalues()(i));
  return v * ph.asDiagonal() * v.adjoint();
}

}  // namespace qw
