#include "qwalk/oracle/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/core/coin.hpp"
#include "qwalk/core/evolve.hpp"

namespace qw {

ConvergenceReport fit_order(std::vector<double> eps, std::vector<double> errors) {
  if (eps.size() != errors.size()) throw std::invalid_argument("eps and error lists differ in length");
  if (eps.size() < 3) throw std::invalid_argument("convergence fit needs at least 3 epsilons");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0)) throw std::invalid_argument("epsilons must be positive");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw std::invalid_argument("epsilons must be strictly decreasing");
    if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) throw std::invalid_argument("errors must be positive");
  }
  const double n = static_cast<double>(eps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double x = std::log(eps[i]), y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double vx = sxx - sx * sx / n, vy = syy - sy * sy / n, cxy = sxy - sx * sy / n;
  ConvergenceReport r;
  r.order = cxy / vx;
  r.r2 = vy > 0.0 ? cxy * cxy / (vx * vy) : 1.0;
  r.eps = std::move(eps);
  r.errors = std::move(errors);
  return r;
}

ConvergenceReport convergence_order(const std::function<double(double)>& error_for, const std::vector<double>& eps) {
  if (eps.size() < 3) throw std::invalid_argument("convergence fit needs at least 3 epsilons");
  std::vector<double> err;
  err.reserve(eps.size());
  for (double e : eps) err.push_back(error_for(e));
  return fit_order(eps, std::move(err));
}

std::array<cplx, 2> default_initial_packet(double x, double length) {
  const double c = 0.5 * length, w = 1.0, k0 = 2.0;
  const double g = std::exp(-(x - c) * (x - c) / (2.0 * w * w));
  const cplx ph = std::exp(cplx{0.0, k0 * x}) * (g / std::sqrt(2.0));
  return {ph, cplx{0.0, 1.0} * ph};
}

namespace {

int grid_count(double length, double eps, const char* what) {
  const double n = length / eps;
  const long r = std::lround(n);
  if (r < 1 || std::abs(n - static_cast<double>(r)) > 1e-9 * n)
    throw std::invalid_argument(std::string(what) + " is not a multiple of eps");
  return static_cast<int>(r);
}

}  // namespace

SpinorField sample_initial(const DiracWalkCase& c, double eps) {
  const int n = grid_count(c.length, eps, "box length");
  SpinorField f(Lattice::line(n), 2);
  for (int p = 0; p < n; ++p) {
    const double x = p * eps;
    const auto v = c.initial ? c.initial(x) : default_initial_packet(x, c.length);
    f.at(static_cast<std::size_t>(p), 0) = v[0];
    f.at(static_cast<std::size_t>(p), 1) = v[1];
  }
  return f;
}

UniformPotential case_potential(const DiracWalkCase& c) {
  UniformPotential u;
  u.a0 = c.a0;
  u.a1 = c.a1;
  if (c.e_field != 0.0) {
    const double a1 = c.a1, e = c.e_field;
    u.a1_of_t = [a1, e](double t) { return a1 - e * t; };
  }
  return u;
}

SpinorField run_dirac_walk(const DiracWalkCase& c, double eps) {
  SpinorField f = sample_initial(c, eps);
  const int steps = grid_count(c.time, eps, "evolution time");
  const UniformPotential u = case_potential(c);
  const Mat2 mix = standard_coin(-eps * c.mass);
  for (int j = 0; j < steps; ++j) {
    const double t = j * eps;
    const double alpha = eps * u.A0(t);
    const Mat2 coin = cplx{std::cos(alpha), std::sin(alpha)} * (mix * phase_shift(-eps * u.A1(t)));
    f = step(f, coin, 0);
  }
  return f;
}

double relative_l2(const SpinorField& x, const SpinorField& ref) {
  if (!x.same_shape(ref)) throw ShapeError("fields differ in shape");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += std::norm(x.data()[i] - ref.data()[i]);
    den += std::norm(ref.data()[i]);
  }
  return std::sqrt(num / den);
}

double walk_oracle_error(const DiracWalkCase& c, double eps) {
  const SpinorField w = run_dirac_walk(c, eps);
  const SpinorField ref = dirac_evolve_spectral(sample_initial(c, eps), eps, c.mass, case_potential(c), c.time);
  return relative_l2(w, ref);
}

ConvergenceReport convergence_order(const DiracWalkCase& c, const std::vector<double>& eps) {
  return convergence_order([&c](double e) { return walk_oracle_error(c, e); }, eps);
}

}  // namespace qw
