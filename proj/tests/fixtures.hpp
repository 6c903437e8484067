#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frcc/skyline.hpp"

namespace frcc::testing {

Polygon rect(double x0, double y0, double x1, double y1);
FuzzyRegion rect_region(double x0, double y0, double x1, double y1, double sr = 0.0);

// Convex polygon inscribed in an axis-aligned ellipse.
Polygon convex_polygon(double cx, double cy, double rx, double ry, int n, double rot = 0.0);
FuzzyRegion convex_region(double cx, double cy, double rx, double ry, int n, double sr = 0.0);

// The larger of the two regions' grid cell diagonals at the given dd.
double max_cell_diagonal(const Geometry& a, const Geometry& b, int dd);

struct ConnCase {
  std::string label;
  FuzzyRegion a;
  FuzzyRegion b;
  NearnessParams params;
  TNormKind tnorm = TNormKind::Lukasiewicz;
};

// Twenty convex region pairs spanning overlap, touch, mid-range gaps and
// out-of-reach separations, with mixed support radii and t-norms. Sized so
// grid sampling at dd=8 stays within 0.1 of the dense oracle.
std::vector<ConnCase> convex_pair_suite();

struct RccCase {
  std::string relation;  // the RCC-8 relation this pair realizes
  FuzzyRegion a;
  FuzzyRegion b;
  ConnectionConfig cfg;
};

// Hand-built crisp configurations, one per RCC-8 relation family member
// (inverses covered by swapping), evaluated at dd = 32 with beta set to one
// grid cell diagonal of the larger region.
std::vector<RccCase> fig1_cases();

// A region whose dd=8 corner lattice contains at least one point of full
// membership, so self-connection is exactly 1.
FuzzyRegion random_fixture_region(std::mt19937_64& rng);

// 31 unit-square candidate regions (ids 101..131) whose distances to the two
// wall targets (ids 901, 902) are controlled: per-dimension differences
// between any two candidates are at least 0.05, which keeps fuzzy skyline
// growth monotone in beta at small thresholds.
Dataset skyline_dataset31();
std::vector<std::int64_t> skyline_target_ids();

// Four candidates with value vectors (1,3), (2,2), (3,1), (3,3) against the
// wall targets 100 and 200; the crisp skyline is {1, 2, 3}.
Dataset demo4_dataset();

std::string cli_path();
// Runs the CLI with the given argument string, captures stdout, discards
// stderr, returns the exit code.
int run_cli(const std::string& args, std::string* stdout_text = nullptr);

std::string temp_dir();
std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& text);

}  // namespace frcc::testing
