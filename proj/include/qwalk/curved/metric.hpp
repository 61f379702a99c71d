#pragma once

#include <array>

#include "qwalk/abelian/gauge_field.hpp"

namespace qw {

// Spatial block of a (+,-,-) metric with G_00 = 1 and G_0i = 0, per (time, site) on a 2D lattice.
struct MetricField2D {
  MetricField2D() = default;
  // Flat: G_XX = G_YY = -1, G_XY = 0.
  MetricField2D(Lattice lat, int times);

  const Lattice& lattice() const { return gxx.lattice(); }
  int times() const { return gxx.times(); }
  // Throws std::invalid_argument naming the first node where the spatial block is not negative definite.
  void validate() const;

  NodeField gxx, gyy, gxy;
};

// Symmetric inverse dreibein [[E1, B], [B, E2]] (spatial part), E^2 = -G^{-1}.
struct Triad {
  Triad() = default;
  Triad(Lattice lat, int times);

  const Lattice& lattice() const { return e1.lattice(); }
  int times() const { return e1.times(); }

  NodeField e1, e2, b;
};

struct TriadValue {
  double e1 = 1.0, e2 = 1.0, b = 0.0;
};

// Closed form with G = det, S = trace of the spatial block:
//   E1 = (-G_YY + sqrt G) / (sqrt G sqrt(2 sqrt G - S)), E2 likewise with G_XX, B = G_XY / (...)
// Throws std::invalid_argument when G <= 0 or 2 sqrt G - S <= 0.
TriadValue triad_at(double gxx, double gyy, double gxy);
Triad triad_from_metric(const MetricField2D& g);

// Dreibein block e = E^{-1} at one node, row-major [[a, b], [c, d]].
std::array<double, 4> dreibein_at(const TriadValue& t);

}  // namespace qw
