#include "qwalk/core/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace qw {

Lattice::Lattice(std::vector<int> extent) : extent_(std::move(extent)) {
  if (extent_.empty() || extent_.size() > 2) throw ShapeError("lattice must have 1 or 2 axes");
  sites_ = 1;
  for (int n : extent_) {
    if (n <= 0) throw ShapeError("lattice extent must be positive");
    sites_ *= static_cast<std::size_t>(n);
  }
}

std::size_t Lattice::stride(int axis) const {
  if (axis < 0 || axis >= dims()) throw ShapeError("axis out of range");
  return axis == 0 ? 1 : static_cast<std::size_t>(extent_[0]);
}

static inline long wrap(long p, long n) {
  long r = p % n;
  return r < 0 ? r + n : r;
}

std::size_t Lattice::index(long p0, long p1) const {
  std::size_t s = static_cast<std::size_t>(wrap(p0, extent_[0]));
  if (dims() == 2) s += static_cast<std::size_t>(wrap(p1, extent_[1])) * static_cast<std::size_t>(extent_[0]);
  return s;
}

int Lattice::coord(std::size_t site, int axis) const {
  if (axis == 0) return static_cast<int>(site % static_cast<std::size_t>(extent_[0]));
  return static_cast<int>(site / static_cast<std::size_t>(extent_[0]));
}

std::size_t Lattice::neighbour(std::size_t site, int axis, int delta) const {
  if (dims() == 1) return index(static_cast<long>(site) + delta);
  long p0 = coord(site, 0), p1 = coord(site, 1);
  return axis == 0 ? index(p0 + delta, p1) : index(p0, p1 + delta);
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double pairwise_sum(std::span<const double> v) {
  constexpr std::size_t leaf = 64;
  if (v.size() <= leaf) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

SpinorField::SpinorField(Lattice lat, int internal_dim)
    : lat_(std::move(lat)), internal_(internal_dim) {
  if (internal_dim < 2 || internal_dim % 2 != 0) throw ShapeError("internal dimension must be 2N with N >= 1");
  amp_.assign(lat_.sites() * static_cast<std::size_t>(internal_dim), cplx{});
}

std::vector<double> SpinorField::density() const {
  std::vector<double> rho(lat_.sites());
  const auto k = static_cast<std::size_t>(internal_);
  for (std::size_t s = 0; s < rho.size(); ++s) {
    double r = 0.0;
    for (std::size_t c = 0; c < k; ++c) r += std::norm(amp_[s * k + c]);
    rho[s] = r;
  }
  return rho;
}

double SpinorField::norm2() const {
  auto rho = density();
  return pairwise_sum(rho);
}

void SpinorField::normalize() {
  double n = std::sqrt(norm2());
  if (n == 0.0) throw std::domain_error("cannot normalize a zero field");
  for (auto& a : amp_) a /= n;
}

void SpinorField::fill(cplx v) { std::fill(amp_.begin(), amp_.end(), v); }

double max_abs_diff(const SpinorField& x, const SpinorField& y) {
  if (!x.same_shape(y)) throw ShapeError("field shapes differ");
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(x.data()[i] - y.data()[i]));
  return r;
}

}  // namespace qw
