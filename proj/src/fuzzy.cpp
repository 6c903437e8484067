#include "frcc/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace frcc {

double Grade::checked(double v) {
  constexpr double slack = 1e-12;
  if (!(v >= -slack && v <= 1.0 + slack)) {
    throw std::invalid_argument("grade out of range: " + std::to_string(v));
  }
  return std::clamp(v, 0.0, 1.0);
}

double tnorm_value(TNormKind kind, double a, double b) {
  switch (kind) {
    case TNormKind::Lukasiewicz:
      // (a + 1) - 1 loses ulps; keep the unit exact.
      if (a == 1.0) return b;
      if (b == 1.0) return a;
      return std::max(0.0, a + b - 1.0);
    case TNormKind::Minimum:
      return std::min(a, b);
    case TNormKind::Product:
      return a * b;
  }
  return 0.0;
}

Grade tnorm(TNormKind kind, Grade a, Grade b) {
  return Grade(tnorm_value(kind, a.value(), b.value()));
}

double tnorm_fold(TNormKind kind, std::span<const double> grades) {
  double acc = 1.0;
  for (double g : grades) acc = tnorm_value(kind, acc, g);
  return acc;
}

double residuum_value(TNormKind kind, double a, double b) {
  if (a <= b) return 1.0;
  switch (kind) {
    case TNormKind::Lukasiewicz:
      return std::min(1.0, 1.0 - a + b);
    case TNormKind::Minimum:
      return b;
    case TNormKind::Product:
      return b / a;  // a > b >= 0, so a > 0
  }
  return 0.0;
}

Grade residuum(TNormKind kind, Grade a, Grade b) {
  return Grade(residuum_value(kind, a.value(), b.value()));
}

void validate_region(const FuzzyRegion& r) {
  validate_geometry(r.core);
  if (!(r.support_radius >= 0.0) || !std::isfinite(r.support_radius)) {
    throw std::invalid_argument("support_radius must be finite and >= 0");
  }
}

double membership_value(const FuzzyRegion& r, const Point& p) {
  if (r.support_radius == 0.0) {
    return contains_point(r.core, p) ? 1.0 : 0.0;
  }
  const double d = distance_point_geometry(p, r.core);
  return std::clamp(1.0 - d / r.support_radius, 0.0, 1.0);
}

Grade membership(const FuzzyRegion& r, const Point& p) {
  return Grade(membership_value(r, p));
}

}  // namespace frcc
