#pragma once

#include <vector>

#include "qwalk/core/lattice.hpp"

namespace qw {

// Real scalar on (time slice j, lattice site). Space is periodic, time is not.
class NodeField {
 public:
  NodeField() = default;
  NodeField(Lattice lat, int times, double value = 0.0);

  const Lattice& lattice() const { return lat_; }
  int times() const { return times_; }
  std::size_t slice_size() const { return lat_.sites(); }

  double& operator()(int j, std::size_t site) { return v_[index(j, site)]; }
  double operator()(int j, std::size_t site) const { return v_[index(j, site)]; }
  // Periodic in the spatial coordinates.
  double& at(int j, long p0, long p1 = 0) { return v_[index(j, lat_.index(p0, p1))]; }
  double at(int j, long p0, long p1 = 0) const { return v_[index(j, lat_.index(p0, p1))]; }

  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }

  bool all_finite() const;

 private:
  std::size_t index(int j, std::size_t site) const;

  Lattice lat_;
  int times_ = 0;
  std::vector<double> v_;
};

using GaugePhase = NodeField;

// Components A_mu, mu = 0 .. dims, with coupling scale eps (also the lattice spacing).
struct AbelianGaugeField {
  AbelianGaugeField() = default;
  AbelianGaugeField(Lattice lat, int times, double eps);

  const Lattice& lattice() const { return comp.at(0).lattice(); }
  int times() const { return comp.at(0).times(); }
  int components() const { return static_cast<int>(comp.size()); }

  NodeField& operator[](int mu) { return comp.at(static_cast<std::size_t>(mu)); }
  const NodeField& operator[](int mu) const { return comp.at(static_cast<std::size_t>(mu)); }

  // Throws ShapeError / std::invalid_argument on inconsistent shapes or non-finite values.
  void validate() const;

  double eps = 1.0;
  std::vector<NodeField> comp;
};

}  // namespace qw
