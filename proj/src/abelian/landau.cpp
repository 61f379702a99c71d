#include "qwalk/abelian/landau.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "qwalk/core/coin.hpp"
#include "qwalk/abelian/em2d.hpp"

namespace qw {

namespace {

struct Entry {
  int row, col;
  cplx w;
};

// Nonzero entries of the reduced operator; row/col index = 2 p + spin.
std::vector<Entry> reduced_entries(double b, int n) {
  const Mat2 cp = standard_coin(f_plus(0.0)), cm = standard_coin(f_minus(0.0));
  std::vector<Entry> e;
  e.reserve(static_cast<std::size_t>(8 * n));
  for (int p = 0; p < n; ++p) {
    const Mat2 v = cm * phase_shift(b * (p - n / 2)) * cp;
    // source of the shifted up and down components at site p
    const int src_up = p + 1 < n ? 2 * (p + 1) : 2 * p + 1;
    const int src_dn = p > 0 ? 2 * (p - 1) + 1 : 2 * p;
    e.push_back({2 * p, src_up, v.a});
    e.push_back({2 * p, src_dn, v.b});
    e.push_back({2 * p + 1, src_up, v.c});
    e.push_back({2 * p + 1, src_dn, v.d});
  }
  return e;
}

}  // namespace

Eigen::MatrixXcd landau_reduced_operator(double b, int sites) {
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(2 * sites, 2 * sites);
  for (const Entry& e : reduced_entries(b, sites)) w(e.row, e.col) += e.w;
  return w;
}

std::vector<LandauMode> landau_modes(double b, int sites, double omega_max, double central_half_width) {
  if (sites < 4) throw std::invalid_argument("chain too short");
  const int n = 2 * sites, kd = 3, ldab = kd + 1;
  const auto entries = reduced_entries(b, sites);

  // Upper band storage of H = (W + W^dagger) / 2, column-major.
  std::vector<cplx> ab(static_cast<std::size_t>(ldab) * n, cplx{});
  // Only the upper triangle is stored; lower contributions are implied by hermiticity.
  auto add = [&](int i, int j, cplx v) {
    if (i <= j) ab[static_cast<std::size_t>(kd + i - j + j * ldab)] += v;
  };
  for (const Entry& e : entries) {
    add(e.row, e.col, 0.5 * e.w);
    add(e.col, e.row, 0.5 * std::conj(e.w));
  }

  const double vl = std::cos(std::min(omega_max, pi)) - 1e-12, vu = 1.0 + 1e-12;
  std::vector<double> w(static_cast<std::size_t>(n));
  {
    std::vector<cplx> work = ab, q(1), z(1);
    std::vector<lapack_int> ifail(static_cast<std::size_t>(n));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_zhbevx(LAPACK_COL_MAJOR, 'N', 'V', 'U', n, kd, work.data(), ldab, q.data(), 1, vl, vu,
                                           0, 0, 2.0 * LAPACKE_dlamch('S'), &found, w.data(), z.data(), 1, ifail.data());
    if (info != 0) throw std::runtime_error("banded eigensolver failed, info = " + std::to_string(info));
    w.resize(static_cast<std::size_t>(found));
  }
  const int m = static_cast<int>(w.size());

  // General band copy of H for shifted LU factorizations (kl = ku = kd).
  const int ldgb = 3 * kd + 1;
  std::vector<cplx> gb(static_cast<std::size_t>(ldgb) * n, cplx{});
  for (int j = 0; j < n; ++j)
    for (int i = std::max(0, j - kd); i <= j; ++i) {
      const cplx h = ab[static_cast<std::size_t>(kd + i - j + j * ldab)];
      gb[static_cast<std::size_t>(2 * kd + i - j + j * ldgb)] = h;
      if (i != j) gb[static_cast<std::size_t>(2 * kd + j - i + i * ldgb)] = std::conj(h);
    }
  auto apply_h = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd r = Eigen::VectorXcd::Zero(n);
    for (const Entry& e : entries) {
      r(e.row) += 0.5 * e.w * v(e.col);
      r(e.col) += 0.5 * std::conj(e.w) * v(e.row);
    }
    return r;
  };
  // Orthonormal basis of the eigenspace of H near `lambda` (dimension c) by block inverse iteration.
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> normal;
  auto eigenspace = [&](double lambda, int c) {
    std::vector<cplx> lu = gb;
    const double shift = lambda + 1e-11;
    for (int j = 0; j < n; ++j) lu[static_cast<std::size_t>(2 * kd + j * ldgb)] -= shift;
    std::vector<lapack_int> piv(static_cast<std::size_t>(n));
    lapack_int info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n, n, kd, kd, lu.data(), ldgb, piv.data());
    if (info < 0) throw std::runtime_error("band LU failed");
    const int k = c + 2;
    Eigen::MatrixXcd x(n, k);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < k; ++l) x(i, l) = cplx{normal(rng), normal(rng)};
    for (int it = 0; it < 3; ++it) {
      info = LAPACKE_zgbtrs(LAPACK_COL_MAJOR, 'N', n, kd, kd, k, lu.data(), ldgb, piv.data(), x.data(), n);
      if (info != 0) throw std::runtime_error("band solve failed");
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(x);
      x = qr.householderQ() * Eigen::MatrixXcd::Identity(n, k);
    }
    Eigen::MatrixXcd hx(n, k);
    for (int l = 0; l < k; ++l) hx.col(l) = apply_h(x.col(l));
    Eigen::MatrixXcd hs = x.adjoint() * hx;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (hs + hs.adjoint()));
    // Ritz vectors closest to lambda.
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) order[static_cast<std::size_t>(l)] = l;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(es.eigenvalues()(a) - lambda) < std::abs(es.eigenvalues()(b) - lambda);
    });
    Eigen::MatrixXcd v(n, c);
    for (int l = 0; l < c; ++l) v.col(l) = x * es.eigenvectors().col(order[static_cast<std::size_t>(l)]);
    return v;
  };

  // Eigenvalues come in ascending order; group near-degenerate ones and split them with K.
  auto apply_k = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd r = Eigen::VectorXcd::Zero(n);
    const cplx half_i{0.0, 0.5};
    for (const Entry& e : entries) {
      r(e.row) += -half_i * e.w * v(e.col);
      r(e.col) += half_i * std::conj(e.w) * v(e.row);
    }
    return r;
  };
  const double centre = sites / 2;
  std::vector<LandauMode> out;
  const double cluster_tol = 1e-9;
  for (int start = 0; start < m;) {
    int stop = start + 1;
    while (stop < m && w[static_cast<std::size_t>(stop)] - w[static_cast<std::size_t>(stop - 1)] < cluster_tol) ++stop;
    const int c = stop - start;
    const Eigen::MatrixXcd v = eigenspace(0.5 * (w[static_cast<std::size_t>(start)] + w[static_cast<std::size_t>(stop - 1)]), c);
    Eigen::MatrixXcd kv(n, c);
    for (int i = 0; i < c; ++i) kv.col(i) = apply_k(v.col(i));
    Eigen::MatrixXcd kc = v.adjoint() * kv;
    kc = 0.5 * (kc + kc.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kc);
    Eigen::MatrixXcd rotated = v * es.eigenvectors();
    // Exact degeneracies of W (e.g. bulk and edge zero modes) are separated by the central projector.
    for (int a = 0; a < c;) {
      int b2 = a + 1;
      while (b2 < c && es.eigenvalues()(b2) - es.eigenvalues()(b2 - 1) < cluster_tol) ++b2;
      if (b2 - a > 1) {
        Eigen::MatrixXcd sub = rotated.middleCols(a, b2 - a);
        Eigen::MatrixXcd psub = sub;
        for (int p = 0; p < sites; ++p)
          if (std::abs(p - centre) > central_half_width) psub.row(2 * p).setZero(), psub.row(2 * p + 1).setZero();
        Eigen::MatrixXcd pc = sub.adjoint() * psub;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ps(0.5 * (pc + pc.adjoint()));
        rotated.middleCols(a, b2 - a) = sub * ps.eigenvectors();
      }
      a = b2;
    }
    for (int i = 0; i < c; ++i) {
      const double cosw = std::clamp(w[static_cast<std::size_t>(start + i)], -1.0, 1.0);
      LandauMode mode;
      mode.omega = std::atan2(es.eigenvalues()(i), cosw);
      double inside = 0.0;
      for (int p = 0; p < sites; ++p)
        if (std::abs(p - centre) <= central_half_width)
          inside += std::norm(rotated(2 * p, i)) + std::norm(rotated(2 * p + 1, i));
      mode.central_weight = inside;
      out.push_back(mode);
    }
    start = stop;
  }
  std::sort(out.begin(), out.end(), [](const LandauMode& x, const LandauMode& y) { return x.omega < y.omega; });
  return out;
}

std::vector<double> landau_quasienergies(double B, double eps, int n_levels, const LandauOptions& opt) {
  if (n_levels <= 0) throw std::invalid_argument("n_levels must be positive");
  if (!(eps > 0.0) || B < 0.0) throw std::invalid_argument("need eps > 0 and B >= 0");
  std::vector<double> levels;
  if (B == 0.0) {
    const int sites = opt.free_sites;
    const double omega_max = std::min(pi, 4.0 * pi * (n_levels + 1) / sites);
    const auto modes = landau_modes(0.0, sites, omega_max, sites);
    for (const auto& md : modes)
      if (md.omega >= -1e-12) levels.push_back(std::max(md.omega, 0.0) / eps);
  } else {
    const double lb = 1.0 / (eps * std::sqrt(B));  // magnetic length in sites
    const double hw = opt.half_width > 0.0 ? opt.half_width : std::sqrt(2.0 * n_levels + 1.0) + 5.0;
    const int sites = 2 * static_cast<int>(std::ceil(hw * lb));
    const double top = std::sqrt(2.0 * B * n_levels) * eps;
    const double omega_max = std::min(pi, 1.5 * top + 0.5 * std::sqrt(2.0 * B) * eps);
    const double central = (hw - opt.edge_margin) * lb;
    const auto modes = landau_modes(B * eps * eps, sites, omega_max, central);
    // Zero mode within a quarter of the first gap; then the positive branch.
    const double zero_tol = 0.25 * std::sqrt(2.0 * B) * eps;
    for (const auto& md : modes) {
      if (md.central_weight < opt.min_central_weight) continue;
      if (std::abs(md.omega) <= zero_tol)
        levels.push_back(std::abs(md.omega) / eps);
      else if (md.omega > 0.0)
        levels.push_back(md.omega / eps);
    }
  }
  std::sort(levels.begin(), levels.end());
  if (static_cast<int>(levels.size()) < n_levels)
    throw std::invalid_argument("only " + std::to_string(levels.size()) + " levels resolvable, " +
                                std::to_string(n_levels) + " requested");
  levels.resize(static_cast<std::size_t>(n_levels));
  return levels;
}

}  // namespace qw
