#include "qwalk/curved/metric.hpp"

#include <cmath>
#include <string>

namespace qw {

MetricField2D::MetricField2D(Lattice lat, int times) : gxx(lat, times, -1.0), gyy(lat, times, -1.0), gxy(lat, times, 0.0) {
  if (lat.dims() != 2) throw ShapeError("metric field needs a 2D lattice");
}

void MetricField2D::validate() const {
  for (int j = 0; j < times(); ++j)
    for (std::size_t s = 0; s < lattice().sites(); ++s) {
      const double a = gxx(j, s), d = gyy(j, s), c = gxy(j, s);
      if (!(a < 0.0) || !(a * d - c * c > 0.0))
        throw std::invalid_argument("spatial metric not negative definite at time " + std::to_string(j) + ", site (" +
                                    std::to_string(lattice().coord(s, 0)) + ", " + std::to_string(lattice().coord(s, 1)) +
                                    ")");
    }
}

Triad::Triad(Lattice lat, int times) : e1(lat, times, 1.0), e2(lat, times, 1.0), b(lat, times, 0.0) {}

TriadValue triad_at(double gxx, double gyy, double gxy) {
  const double g = gxx * gyy - gxy * gxy;
  const double sum = gxx + gyy;
  if (!(g > 0.0)) throw std::invalid_argument("degenerate metric: determinant " + std::to_string(g));
  const double sg = std::sqrt(g);
  const double w = 2.0 * sg - sum;
  if (!(w > 0.0)) throw std::invalid_argument("degenerate metric: 2 sqrt G - trace = " + std::to_string(w));
  const double den = sg * std::sqrt(w);
  return {(-gyy + sg) / den, (-gxx + sg) / den, gxy / den};
}

Triad triad_from_metric(const MetricField2D& g) {
  Triad t(g.lattice(), g.times());
  for (int j = 0; j < g.times(); ++j)
    for (std::size_t s = 0; s < g.lattice().sites(); ++s) {
      TriadValue v;
      try {
        v = triad_at(g.gxx(j, s), g.gyy(j, s), g.gxy(j, s));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " at time " + std::to_string(j) + ", site (" +
                                    std::to_string(g.lattice().coord(s, 0)) + ", " +
                                    std::to_string(g.lattice().coord(s, 1)) + ")");
      }
      t.e1(j, s) = v.e1;
      t.e2(j, s) = v.e2;
      t.b(j, s) = v.b;
    }
  return t;
}

std::array<double, 4> dreibein_at(const TriadValue& t) {
  const double det = t.e1 * t.e2 - t.b * t.b;
  if (det == 0.0) throw std::invalid_argument("singular triad");
  return {t.e2 / det, -t.b / det, -t.b / det, t.e1 / det};
}

}  // namespace qw
