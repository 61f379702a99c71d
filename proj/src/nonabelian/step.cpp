#include "qwalk/nonabelian/step.hpp"

#include "qwalk/core/coin.hpp"

namespace qw {

SpinorField nonabelian_step(const SpinorField& psi, const GroupLinkPair& links, double delta_theta) {
  const Lattice& lat = psi.lattice();
  if (lat.dims() != 1) throw ShapeError("non-Abelian walk is 1D");
  if (links.plus.size() != lat.sites() || links.minus.size() != lat.sites()) throw ShapeError("link count mismatch");
  const int n = psi.internal_dim() / 2;
  for (std::size_t s = 0; s < lat.sites(); ++s)
    if (links.plus[s].rows() != n || links.minus[s].rows() != n)
      throw ShapeError("link dimension does not match internal dimension 2N");
  const Mat2 c = standard_coin(delta_theta);
  SpinorField out(lat, psi.internal_dim());
  const long sites = static_cast<long>(lat.sites());
#pragma omp parallel for schedule(static)
  for (long sl = 0; sl < sites; ++sl) {
    const auto s = static_cast<std::size_t>(sl);
    Eigen::Map<const Eigen::VectorXcd> up(&psi.at(lat.neighbour(s, 0, 1), 0), n);
    Eigen::Map<const Eigen::VectorXcd> dn(&psi.at(lat.neighbour(s, 0, -1), n), n);
    const Eigen::VectorXcd u = links.plus[s] * up;
    const Eigen::VectorXcd d = links.minus[s] * dn;
    Eigen::Map<Eigen::VectorXcd> ou(&out.at(s, 0), n), od(&out.at(s, n), n);
    ou = c.a * u + c.b * d;
    od = c.c * u + c.d * d;
  }
  return out;
}

}  // namespace qw
