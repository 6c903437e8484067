#pragma once

#include <cstdint>
#include <vector>

#include "frcc/dataset.hpp"

namespace frcc {

// One skyline candidate: per-target values where smaller is better.
struct CandidateTuple {
  std::int64_t region_id = 0;
  std::vector<double> values;
};

enum class SkylineMode { DistanceOnly, ConnectionBased };

struct SkylineQuery {
  std::vector<FuzzyRegion> targets;
  SkylineMode mode = SkylineMode::DistanceOnly;
  NearnessParams params;
  Grade min_c{0.01};
  TNormKind tnorm = TNormKind::Lukasiewicz;
  ConnectionConfig cfg;  // used in ConnectionBased mode
};

struct SkylineEntry {
  std::int64_t region_id = 0;
  Grade grade;
  std::vector<double> values;
};

// Entries sorted by grade descending, ties by region_id ascending; every
// entry has grade >= min_c.
struct SkylineResult {
  std::vector<SkylineEntry> entries;
};

// DistanceOnly: value per target is the core-to-core distance.
// ConnectionBased: value is 1 - connect_grid(region, target), so stronger
// connection means a smaller (better) value.
std::vector<CandidateTuple> build_candidates(const std::vector<RegionRecord>& regions,
                                             const SkylineQuery& q);

// Block-nested-loop skyline: exactly the non-dominated tuples. u dominates v
// iff u.values <= v.values componentwise with at least one strict <.
std::vector<std::int64_t> crisp_skyline(const std::vector<CandidateTuple>& cands);

// Degree to which u strictly dominates v. Per dimension, u being only
// slightly worse still counts as "at least as good" to the degree of the
// nearness ramp; strictness is the complement of the swapped comparison.
Grade fuzzy_dominance(const CandidateTuple& u, const CandidateTuple& v,
                      const NearnessParams& params, TNormKind tnorm);

// grade(u) = 1 - max over v != u of fuzzy_dominance(v, u); keeps candidates
// with grade >= min_c.
SkylineResult fuzzy_skyline(const std::vector<CandidateTuple>& cands, const SkylineQuery& q);

}  // namespace frcc
