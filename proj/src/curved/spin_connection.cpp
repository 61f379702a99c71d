#include "qwalk/curved/spin_connection.hpp"

#include <stdexcept>

namespace qw {

Mat2 flat_gamma(int a) {
  const cplx i{0.0, 1.0};
  switch (a) {
    case 0: return {0.0, 1.0, 1.0, 0.0};
    case 1: return {0.0, 1.0, -1.0, 0.0};  // i sigma_2
    case 2: return {i, 0.0, 0.0, -i};      // i sigma_3
  }
  throw std::out_of_range("gamma index out of range");
}

Mat2 spin_generator(int a, int b) {
  const Mat2 ga = flat_gamma(a), gb = flat_gamma(b);
  const Mat2 ab = ga * gb, ba = gb * ga;
  return {0.25 * (ab.a - ba.a), 0.25 * (ab.b - ba.b), 0.25 * (ab.c - ba.c), 0.25 * (ab.d - ba.d)};
}

namespace {

using M3 = std::array<std::array<double, 3>, 3>;

struct Local {
  M3 g{};  // g_{mu nu}
  M3 e{};  // e[a][mu] = E_a^mu
};

Local local(const MetricField2D& g, const Triad& t, int j, std::size_t s) {
  Local l;
  l.g[0][0] = 1.0;
  l.g[1][1] = g.gxx(j, s);
  l.g[2][2] = g.gyy(j, s);
  l.g[1][2] = l.g[2][1] = g.gxy(j, s);
  l.e[0][0] = 1.0;
  l.e[1][1] = t.e1(j, s);
  l.e[1][2] = l.e[2][1] = t.b(j, s);
  l.e[2][2] = t.e2(j, s);
  return l;
}

// d_nu of the local data for nu = 0 (time), 1 (X), 2 (Y).
Local derivative(const MetricField2D& g, const Triad& t, int j, std::size_t s, int nu, double dt, double dx) {
  const Lattice& lat = g.lattice();
  Local lo, hi;
  double h = 0.0;
  if (nu == 0) {
    const int n = g.times();
    if (n == 1) return Local{};
    const int jm = j > 0 ? j - 1 : j, jp = j + 1 < n ? j + 1 : j;
    lo = local(g, t, jm, s);
    hi = local(g, t, jp, s);
    h = (jp - jm) * dt;
  } else {
    lo = local(g, t, j, lat.neighbour(s, nu - 1, -1));
    hi = local(g, t, j, lat.neighbour(s, nu - 1, 1));
    h = 2.0 * dx;
  }
  Local d;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      d.g[a][b] = (hi.g[a][b] - lo.g[a][b]) / h;
      d.e[a][b] = (hi.e[a][b] - lo.e[a][b]) / h;
    }
  return d;
}

M3 inverse(const M3& m) {
  // g_00 = 1, g_0i = 0: invert the spatial block only.
  M3 r{};
  r[0][0] = 1.0 / m[0][0];
  const double det = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  r[1][1] = m[2][2] / det;
  r[2][2] = m[1][1] / det;
  r[1][2] = -m[1][2] / det;
  r[2][1] = -m[2][1] / det;
  return r;
}

}  // namespace

std::vector<ConnectionNode> spin_connection(const MetricField2D& g, const Triad& t, int mu, int j, double dt, double dx) {
  if (mu < 0 || mu > 2) throw std::out_of_range("connection index out of range");
  if (g.lattice() != t.lattice() || g.times() != t.times()) throw ShapeError("metric and triad shapes differ");
  const Lattice& lat = g.lattice();
  std::vector<ConnectionNode> out(lat.sites());
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    const Local l = local(g, t, j, s);
    const M3 ginv = inverse(l.g);
    std::array<Local, 3> d;
    for (int nu = 0; nu < 3; ++nu) d[static_cast<std::size_t>(nu)] = derivative(g, t, j, s, nu, dt, dx);
    // Christoffel symbols Gamma^alpha_{mu nu} for the fixed mu.
    M3 chr{};
    for (int al = 0; al < 3; ++al)
      for (int nu = 0; nu < 3; ++nu) {
        double v = 0.0;
        for (int be = 0; be < 3; ++be)
          v += ginv[al][be] * (d[mu].g[be][nu] + d[nu].g[be][mu] - d[be].g[mu][nu]);
        chr[al][nu] = 0.5 * v;
      }
    ConnectionNode& node = out[s];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double w = 0.0;
        for (int al = 0; al < 3; ++al) {
          double cov = d[mu].e[b][al];
          for (int nu = 0; nu < 3; ++nu) cov += chr[al][nu] * l.e[b][nu];
          double lowered = 0.0;
          for (int be = 0; be < 3; ++be) lowered += l.g[al][be] * l.e[a][be];
          w += lowered * cov;
        }
        node.omega[a][b] = w;
      }
    Mat2 gm{0.0, 0.0, 0.0, 0.0};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const Mat2 sab = spin_generator(a, b);
        const double c = 0.5 * node.omega[a][b];
        gm = {gm.a + c * sab.a, gm.b + c * sab.b, gm.c + c * sab.c, gm.d + c * sab.d};
      }
    node.gamma = gm;
  }
  return out;
}

}  // namespace qw
