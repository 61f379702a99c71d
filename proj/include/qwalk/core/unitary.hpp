#pragma once

#include <Eigen/Dense>

namespace qw {

// U = exp(i omega / N) * special, det(special) = 1, omega = arg det U in [0, 2pi).
struct FactorizedUnitary {
  double global_phase = 0.0;  // omega
  Eigen::MatrixXcd special;
};

// Throws std::invalid_argument (message carries ||U^dagger U - 1||) when U is not unitary within tol.
FactorizedUnitary factor_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

double unitarity_defect(const Eigen::MatrixXcd& u);

// exp(i H) for Hermitian H through its eigendecomposition.
Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& h);

double hermiticity_defect(const Eigen::MatrixXcd& h);

}  // namespace qw
