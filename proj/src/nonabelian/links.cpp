#include "qwalk/nonabelian/links.hpp"

#include <stdexcept>
#include <string>

#include "qwalk/core/unitary.hpp"

namespace qw {

MatrixNodeField::MatrixNodeField(Lattice lat, int times, int n) : lat_(std::move(lat)), times_(times), n_(n) {
  if (lat_.dims() != 1) throw ShapeError("non-Abelian fields live on a 1D lattice");
  if (times <= 0 || n <= 0) throw ShapeError("need positive time slices and gauge dimension");
  m_.assign(static_cast<std::size_t>(times) * lat_.sites(), Eigen::MatrixXcd::Identity(n, n));
}

Eigen::MatrixXcd& MatrixNodeField::operator()(int j, std::size_t site) {
  if (j < 0 || j >= times_) throw ShapeError("time slice " + std::to_string(j) + " out of range");
  return m_[static_cast<std::size_t>(j) * lat_.sites() + site];
}

const Eigen::MatrixXcd& MatrixNodeField::operator()(int j, std::size_t site) const {
  if (j < 0 || j >= times_) throw ShapeError("time slice " + std::to_string(j) + " out of range");
  return m_[static_cast<std::size_t>(j) * lat_.sites() + site];
}

void MatrixNodeField::set_zero() {
  for (auto& x : m_) x.setZero();
}

NonAbelianGaugeField::NonAbelianGaugeField(Lattice lat, int times, int n, double eps_)
    : eps(eps_), b0(lat, times, n), b1(lat, times, n) {
  b0.set_zero();
  b1.set_zero();
}

void NonAbelianGaugeField::validate(double tol) const {
  for (int j = 0; j < times(); ++j)
    for (std::size_t s = 0; s < lattice().sites(); ++s) {
      const double h = std::max(hermiticity_defect(b0(j, s)), hermiticity_defect(b1(j, s)));
      if (h > tol)
        throw std::invalid_argument("gauge field not Hermitian at (" + std::to_string(j) + ", " + std::to_string(s) +
                                    "), defect " + std::to_string(h));
    }
}

GroupLinkPair link_exponentials(const NonAbelianGaugeField& g, int j) {
  const std::size_t n = g.lattice().sites();
  for (std::size_t s = 0; s < n; ++s) {
    const double h = std::max(hermiticity_defect(g.b0(j, s)), hermiticity_defect(g.b1(j, s)));
    if (h > 1e-12) throw std::invalid_argument("gauge field not Hermitian, defect " + std::to_string(h));
  }
  GroupLinkPair l;
  l.plus.resize(n);
  l.minus.resize(n);
  const long sites = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long s = 0; s < sites; ++s) {
    const auto site = static_cast<std::size_t>(s);
    l.plus[site] = expi_hermitian(g.b0(j, site) + g.b1(j, site));
    l.minus[site] = expi_hermitian(g.b0(j, site) - g.b1(j, site));
  }
  return l;
}

GroupLinkPair gauge_transform_links(const GroupLinkPair& links, const GaugeGroupField& g, int j) {
  if (j + 1 >= g.times()) throw ShapeError("gauge transformation needs time slices j and j + 1");
  const Lattice& lat = g.lattice();
  if (links.plus.size() != lat.sites() || links.minus.size() != lat.sites()) throw ShapeError("link count mismatch");
  GroupLinkPair out;
  out.plus.resize(lat.sites());
  out.minus.resize(lat.sites());
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    const long p = static_cast<long>(s);
    out.plus[s] = g(j + 1, s) * links.plus[s] * g.at(j, p + 1).adjoint();
    out.minus[s] = g(j + 1, s) * links.minus[s] * g.at(j, p - 1).adjoint();
  }
  return out;
}

SpinorField gauge_rotate(const SpinorField& psi, const GaugeGroupField& g, int j) {
  const int n = g.dim();
  if (psi.internal_dim() != 2 * n) throw ShapeError("field internal dimension must be 2N");
  if (psi.lattice() != g.lattice()) throw ShapeError("lattice mismatch");
  SpinorField out(psi.lattice(), psi.internal_dim());
  for (std::size_t s = 0; s < psi.lattice().sites(); ++s) {
    const Eigen::MatrixXcd& m = g(j, s);
    for (int spin = 0; spin < 2; ++spin) {
      Eigen::Map<const Eigen::VectorXcd> in(&psi.at(s, spin * n), n);
      Eigen::Map<Eigen::VectorXcd> o(&out.at(s, spin * n), n);
      o = m * in;
    }
  }
  return out;
}

}  // namespace qw
