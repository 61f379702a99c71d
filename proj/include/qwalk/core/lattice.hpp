#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/core/types.hpp"

namespace qw {

// Periodic 1D or 2D lattice. Axis 0 is the fastest-varying index.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::vector<int> extent);
  static Lattice line(int n) { return Lattice({n}); }
  static Lattice square(int nx, int ny) { return Lattice({nx, ny}); }

  int dims() const { return static_cast<int>(extent_.size()); }
  int extent(int axis) const { return extent_.at(static_cast<std::size_t>(axis)); }
  const std::vector<int>& extents() const { return extent_; }
  std::size_t sites() const { return sites_; }
  std::size_t stride(int axis) const;

  // Site index of (p0, p1) with periodic wrap on each axis.
  std::size_t index(long p0, long p1 = 0) const;
  int coord(std::size_t site, int axis) const;
  // Neighbour of `site` displaced by `delta` along `axis`, periodic.
  std::size_t neighbour(std::size_t site, int axis, int delta) const;

  bool operator==(const Lattice& o) const { return extent_ == o.extent_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

 private:
  std::vector<int> extent_;
  std::size_t sites_ = 0;
};

bool is_power_of_two(int n);

// Fixed-order pairwise summation; the result does not depend on thread count.
double pairwise_sum(std::span<const double> v);

// Complex amplitudes per (site, internal index), site-major.
class SpinorField {
 public:
  SpinorField() = default;
  explicit SpinorField(Lattice lat, int internal_dim = 2);

  const Lattice& lattice() const { return lat_; }
  int internal_dim() const { return internal_; }
  std::size_t size() const { return amp_.size(); }

  cplx* data() { return amp_.data(); }
  const cplx* data() const { return amp_.data(); }
  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  cplx& at(std::size_t site, int c) { return amp_[site * static_cast<std::size_t>(internal_) + static_cast<std::size_t>(c)]; }
  const cplx& at(std::size_t site, int c) const {
    return amp_[site * static_cast<std::size_t>(internal_) + static_cast<std::size_t>(c)];
  }

  // Site probability density summed over the internal index.
  std::vector<double> density() const;
  double norm2() const;
  void normalize();
  void fill(cplx v);

  bool same_shape(const SpinorField& o) const { return lat_ == o.lat_ && internal_ == o.internal_; }

 private:
  Lattice lat_;
  int internal_ = 2;
  std::vector<cplx> amp_;
};

double max_abs_diff(const SpinorField& x, const SpinorField& y);

}  // namespace qw
