#include "qwalk/oracle/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <stdexcept>

#include <fftw3.h>

namespace qw {

Mat2 dirac_symbol(double k, double mass, double a0, double a1) {
  const double z = k - a1;
  return {cplx{z + a0, 0.0}, cplx{-mass, 0.0}, cplx{-mass, 0.0}, cplx{-z + a0, 0.0}};
}

Mat2 expi_hermitian2(const Mat2& m) {
  // m = h0 + h.sigma
  const double h0 = 0.5 * (m.a + m.d).real();
  const double hx = 0.5 * (m.b + m.c).real();
  const double hy = 0.5 * (m.c - m.b).imag();
  const double hz = 0.5 * (m.a - m.d).real();
  const double r = std::sqrt(hx * hx + hy * hy + hz * hz);
  const double c = std::cos(r);
  const double s = r > 0.0 ? std::sin(r) / r : 1.0;
  const cplx i{0.0, 1.0};
  const cplx ph = std::exp(i * h0);
  // cos r + i sin r (h.sigma) / r
  const Mat2 u{c + i * s * hz, i * s * cplx{hx, -hy}, i * s * cplx{hx, hy}, c - i * s * hz};
  return ph * u;
}

namespace {

Mat2 commutator(const Mat2& x, const Mat2& y) {
  const Mat2 a = x * y, b = y * x;
  return {a.a - b.a, a.b - b.b, a.c - b.c, a.d - b.d};
}

Mat2 add(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

// Propagator of d_t psi = i H(t) psi for one mode over [t0, t0 + T].
Mat2 mode_propagator(double k, double mass, const UniformPotential& a, double t0, double T, double max_dt) {
  if (!a.time_dependent()) {
    const Mat2 h = dirac_symbol(k, mass, a.a0, a.a1);
    return expi_hermitian2(cplx{T, 0.0} * h);
  }
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(T) / max_dt)));
  const double h = T / n;
  const double c1 = 0.5 - std::sqrt(3.0) / 6.0, c2 = 0.5 + std::sqrt(3.0) / 6.0;
  Mat2 u = identity2();
  for (int s = 0; s < n; ++s) {
    const double t = t0 + s * h;
    const double ta = t + c1 * h, tb = t + c2 * h;
    const Mat2 h1 = dirac_symbol(k, mass, a.A0(ta), a.A1(ta));
    const Mat2 h2 = dirac_symbol(k, mass, a.A0(tb), a.A1(tb));
    // Omega = (h/2)(A1 + A2) + (sqrt3 h^2 / 12)[A2, A1], A = i H; Omega = i M with M Hermitian.
    // [iH2, iH1] = -[H2, H1], and [H2, H1] = i K with K Hermitian, so M = (h/2)(H1 + H2) - (sqrt3 h^2/12) K.
    const Mat2 comm = commutator(h2, h1);
    const Mat2 kmat = cplx{0.0, -1.0} * comm;
    const Mat2 m = add(cplx{0.5 * h, 0.0} * add(h1, h2), cplx{-std::sqrt(3.0) * h * h / 12.0, 0.0} * kmat);
    u = expi_hermitian2(m) * u;
  }
  return u;
}

}  // namespace

SpinorField dirac_evolve_spectral(const SpinorField& psi, double dx, double mass, const UniformPotential& a, double T,
                                  double t0, double max_dt) {
  const Lattice& lat = psi.lattice();
  if (lat.dims() != 1 || psi.internal_dim() != 2) throw ShapeError("spectral oracle works on 1D two-component fields");
  if (!(dx > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  const int n = lat.extent(0);
  const double length = n * dx;
  std::vector<cplx> up(static_cast<std::size_t>(n)), dn(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    up[static_cast<std::size_t>(p)] = psi.at(static_cast<std::size_t>(p), 0);
    dn[static_cast<std::size_t>(p)] = psi.at(static_cast<std::size_t>(p), 1);
  }
  auto* u = reinterpret_cast<fftw_complex*>(up.data());
  auto* d = reinterpret_cast<fftw_complex*>(dn.data());
  fftw_plan fu = fftw_plan_dft_1d(n, u, u, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan fd = fftw_plan_dft_1d(n, d, d, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan bu = fftw_plan_dft_1d(n, u, u, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_plan bd = fftw_plan_dft_1d(n, d, d, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(fu);
  fftw_execute(fd);
  for (int m = 0; m < n; ++m) {
    const int mm = m < n / 2 ? m : m - n;  // Nyquist mode sits at -pi / dx
    const double k = 2.0 * pi * mm / length;
    const Mat2 g = mode_propagator(k, mass, a, t0, T, max_dt);
    const auto i = static_cast<std::size_t>(m);
    const cplx x = up[i], y = dn[i];
    up[i] = g.a * x + g.b * y;
    dn[i] = g.c * x + g.d * y;
  }
  fftw_execute(bu);
  fftw_execute(bd);
  fftw_destroy_plan(fu);
  fftw_destroy_plan(fd);
  fftw_destroy_plan(bu);
  fftw_destroy_plan(bd);
  SpinorField out(lat, 2);
  const double inv = 1.0 / n;
  for (int p = 0; p < n; ++p) {
    out.at(static_cast<std::size_t>(p), 0) = up[static_cast<std::size_t>(p)] * inv;
    out.at(static_cast<std::size_t>(p), 1) = dn[static_cast<std::size_t>(p)] * inv;
  }
  return out;
}

UniformPotential uniform_potential(const AbelianGaugeField& a) {
  a.validate();
  if (a.lattice().dims() != 1) throw ShapeError("spectral oracle works on 1D fields");
  const std::size_t n = a.lattice().sites();
  for (int mu = 0; mu < 2; ++mu)
    for (int j = 0; j < a.times(); ++j)
      for (std::size_t s = 1; s < n; ++s)
        if (a[mu](j, s) != a[mu](j, 0))
          throw std::invalid_argument("gauge field is not constant in space at slice " + std::to_string(j));
  UniformPotential u;
  u.a0 = a[0](0, 0);
  u.a1 = a[1](0, 0);
  if (a.times() > 1) {
    auto interp = [a](int mu) {
      return [a, mu](double t) {
        const double x = std::clamp(t / a.eps, 0.0, static_cast<double>(a.times() - 1));
        const int j = std::min(static_cast<int>(x), a.times() - 2);
        const double f = x - j;
        return (1.0 - f) * a[mu](j, 0) + f * a[mu](j + 1, 0);
      };
    };
    u.a0_of_t = interp(0);
    u.a1_of_t = interp(1);
  }
  return u;
}

std::array<cplx, 2> PlaneWaveSolution::operator()(double x, double t) const {
  const cplx ph = std::exp(cplx{0.0, k * x + energy * t});
  return {up * ph, down * ph};
}

PlaneWaveSolution plane_wave(double mass, double k, int branch, double a0, double a1) {
  PlaneWaveSolution w;
  w.mass = mass;
  w.k = k;
  w.a0 = a0;
  w.a1 = a1;
  const double z = k - a1;
  const double r = std::sqrt(z * z + mass * mass);
  const double lam = branch >= 0 ? r : -r;
  w.energy = a0 + lam;
  // (z - lam) u - m d = 0
  if (r == 0.0) {
    w.up = 1.0;
    w.down = 0.0;
    return w;
  }
  double u, d;
  if (std::abs(z - lam) > std::abs(z + lam)) {
    u = mass;
    d = z - lam;
  } else {
    u = z + lam;  // second row: -m u - (z + lam) d = 0
    d = -mass;
  }
  const double nrm = std::hypot(u, d);
  w.up = u / nrm;
  w.down = d / nrm;
  return w;
}

double dirac_residual(const PlaneWaveSolution& w, double x, double t) {
  const auto psi = w(x, t);
  const cplx i{0.0, 1.0};
  // d_t psi = i E psi, d_x psi = i K psi
  const cplx dt_u = i * w.energy * psi[0], dt_d = i * w.energy * psi[1];
  const cplx dx_u = i * w.k * psi[0], dx_d = i * w.k * psi[1];
  const cplx rhs_u = (dx_u - i * w.a1 * psi[0]) + i * w.a0 * psi[0] - i * w.mass * psi[1];
  const cplx rhs_d = -(dx_d - i * w.a1 * psi[1]) + i * w.a0 * psi[1] - i * w.mass * psi[0];
  return std::max(std::abs(dt_u - rhs_u), std::abs(dt_d - rhs_d));
}

}  // namespace qw
