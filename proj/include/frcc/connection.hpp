#pragma once

#include <vector>

#include "frcc/fuzzy.hpp"

namespace frcc {

// Resolution of "near": two points are fully near within distance alpha,
// not near beyond alpha + beta, with a linear ramp in between.
struct NearnessParams {
  double alpha = 0.0;
  double beta = 0.0;
};

void validate_params(const NearnessParams& p);

struct ConnectionConfig {
  NearnessParams params;
  TNormKind tnorm = TNormKind::Lukasiewicz;
  int dd = 8;  // grid divisions per dimension
};

double nearness_value(const NearnessParams& p, double d);
Grade nearness(const NearnessParams& p, double d);

// A fuzzy region sampled on a row-major point lattice with cached
// memberships. `corners` samples the (min_x, min_y) corner of every cell of
// the core's bounding-box grid; `centers_inflated` samples cell centers of
// the bounding box inflated by the support radius, so the fuzzy halo is
// covered too.
struct SampledRegion {
  std::vector<double> xs;    // cols entries, column x per lattice column
  std::vector<double> ys;    // rows entries, row y per lattice row
  std::vector<double> memb;  // rows*cols entries, row-major
  int rows = 0;
  int cols = 0;

  Point point_at(int row, int col) const { return Point{xs[col], ys[row]}; }
  double memb_at(int row, int col) const { return memb[static_cast<std::size_t>(row) * cols + col]; }

  static SampledRegion corners(const FuzzyRegion& r, int dd);
  static SampledRegion centers_inflated(const FuzzyRegion& r, int dd);
};

// Discretized connection grade between two fuzzy regions: the maximum over
// lattice point pairs (p, q) of T(R(d(p,q)), T(A(p), B(q))), sampling each
// core's bounding box on a dd x dd corner lattice. Deterministic: exact max
// in row-major order. Returns 0 when either core is empty.
Grade connect_grid(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg);

// Reference evaluation of the same quantity on a dense dd_fine x dd_fine
// lattice of cell centers over each region's halo-inflated bounding box.
Grade connect_oracle(const FuzzyRegion& a, const FuzzyRegion& b, const NearnessParams& params,
                     TNormKind tnorm, int dd_fine);

// Exact degree to which point p is near fuzzy region r:
// sup over all q in the plane of T(R(d(p,q)), membership(r, q)).
// The supremum reduces to a one-dimensional problem along the shortest path
// from p to the core and is evaluated in closed form.
double near_region_value(const FuzzyRegion& r, const Point& p, const NearnessParams& params,
                         TNormKind kind);

}  // namespace frcc
