#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qw {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// 2x2 complex matrix stored row-major: [[a, b], [c, d]].
// Layout is relied upon by the SIMD kernels (four contiguous complex values).
struct Mat2 {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  cplx c{0.0, 0.0};
  cplx d{1.0, 0.0};
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 operator*(cplx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

inline Mat2 dagger(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

inline cplx det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Mat2 identity2() { return {}; }

// Max entrywise modulus of x - y.
inline double max_abs_diff(const Mat2& x, const Mat2& y) {
  double r = std::abs(x.a - y.a);
  r = std::max(r, std::abs(x.b - y.b));
  r = std::max(r, std::abs(x.c - y.c));
  return std::max(r, std::abs(x.d - y.d));
}

// ||U^dagger U - 1||_max
inline double unitarity_defect(const Mat2& m) { return max_abs_diff(dagger(m) * m, identity2()); }

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qw
