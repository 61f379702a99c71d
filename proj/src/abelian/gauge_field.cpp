#include "qwalk/abelian/gauge_field.hpp"

#include <cmath>
#include <string>

namespace qw {

NodeField::NodeField(Lattice lat, int times, double value) : lat_(std::move(lat)), times_(times) {
  if (times <= 0) throw ShapeError("node field needs at least one time slice");
  v_.assign(static_cast<std::size_t>(times) * lat_.sites(), value);
}

std::size_t NodeField::index(int j, std::size_t site) const {
  if (j < 0 || j >= times_) throw ShapeError("time slice " + std::to_string(j) + " outside [0, " + std::to_string(times_) + ")");
  return static_cast<std::size_t>(j) * lat_.sites() + site;
}

bool NodeField::all_finite() const {
  for (double x : v_)
    if (!std::isfinite(x)) return false;
  return true;
}

AbelianGaugeField::AbelianGaugeField(Lattice lat, int times, double eps_) : eps(eps_) {
  if (!(eps_ > 0.0)) throw std::invalid_argument("coupling scale must be positive");
  const int n = lat.dims() + 1;
  for (int mu = 0; mu < n; ++mu) comp.emplace_back(lat, times);
}

void AbelianGaugeField::validate() const {
  if (comp.empty()) throw ShapeError("gauge field has no components");
  if (components() != lattice().dims() + 1) throw ShapeError("gauge field needs dims + 1 components");
  for (const auto& c : comp) {
    if (c.lattice() != lattice() || c.times() != times()) throw ShapeError("gauge components differ in shape");
    if (!c.all_finite()) throw std::invalid_argument("gauge field has non-finite values");
  }
}

}  // namespace qw
