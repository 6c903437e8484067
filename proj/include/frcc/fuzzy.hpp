#pragma once

#include <span>

#include "frcc/geometry.hpp"

namespace frcc {

// Truth value of a fuzzy predicate. Construction clamps values within 1e-12
// of the unit interval (sup-T reductions can overshoot by ulps) and rejects
// anything farther outside.
class Grade {
 public:
  Grade() = default;
  explicit Grade(double v) : value_(checked(v)) {}

  double value() const { return value_; }

  friend bool operator==(const Grade&, const Grade&) = default;

 private:
  static double checked(double v);

  double value_ = 0.0;
};

inline Grade complement(Grade g) { return Grade(1.0 - g.value()); }

enum class TNormKind { Lukasiewicz, Minimum, Product };

double tnorm_value(TNormKind kind, double a, double b);
Grade tnorm(TNormKind kind, Grade a, Grade b);

// Left-associated fold of tnorm over the span; empty span yields 1.
double tnorm_fold(TNormKind kind, std::span<const double> grades);

// Residual implicator I_T(a, b) = sup{c : T(a, c) <= b}.
double residuum_value(TNormKind kind, double a, double b);
Grade residuum(TNormKind kind, Grade a, Grade b);

// A crisp core with a halo of linearly decaying membership: membership is 1
// on the core and falls to 0 at support_radius away from it. A zero radius
// degenerates to crisp containment.
struct FuzzyRegion {
  Geometry core;
  double support_radius = 0.0;
};

// Validates the core geometry and support_radius >= 0.
void validate_region(const FuzzyRegion& r);

double membership_value(const FuzzyRegion& r, const Point& p);
Grade membership(const FuzzyRegion& r, const Point& p);

}  // namespace frcc
