#include "frcc/skyline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frcc {

namespace {

bool dominates(const CandidateTuple& u, const CandidateTuple& v) {
  bool strict = false;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    if (u.values[i] > v.values[i]) return false;
    if (u.values[i] < v.values[i]) strict = true;
  }
  return strict;
}

void check_dimensions(const std::vector<CandidateTuple>& cands) {
  for (const CandidateTuple& c : cands) {
    if (c.values.size() != cands.front().values.size())
      throw std::invalid_argument("candidate tuples must share dimensionality");
    for (double v : c.values)
      if (!std::isfinite(v)) throw std::invalid_argument("candidate values must be finite");
  }
}

}  // namespace

std::vector<CandidateTuple> build_candidates(const std::vector<RegionRecord>& regions,
                                             const SkylineQuery& q) {
  if (regions.empty()) throw std::invalid_argument("skyline: no candidate regions");
  if (q.targets.empty()) throw std::invalid_argument("skyline: at least one target required");
  std::vector<CandidateTuple> out;
  out.reserve(regions.size());
  for (const RegionRecord& rec : regions) {
    CandidateTuple t;
    t.region_id = rec.id;
    t.values.reserve(q.targets.size());
    for (const FuzzyRegion& target : q.targets) {
      if (q.mode == SkylineMode::DistanceOnly) {
        t.values.push_back(distance_geometry_geometry(rec.fuzzy.core, target.core));
      } else {
        t.values.push_back(1.0 - connect_grid(rec.fuzzy, target, q.cfg).value());
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::int64_t> crisp_skyline(const std::vector<CandidateTuple>& cands) {
  check_dimensions(cands);
  std::vector<std::int64_t> out;
  for (const CandidateTuple& u : cands) {
    bool dominated = false;
    for (const CandidateTuple& v : cands) {
      if (&v != &u && dominates(v, u)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(u.region_id);
  }
  return out;
}

Grade fuzzy_dominance(const CandidateTuple& u, const CandidateTuple& v,
                      const NearnessParams& params, TNormKind tnorm) {
  if (u.values.size() != v.values.size())
    throw std::invalid_argument("fuzzy_dominance: dimensionality mismatch");
  validate_params(params);
  double at_least = 1.0;  // degree u is at least as good as v everywhere
  double strictly = 0.0;  // degree u is strictly better somewhere
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double a =
        u.values[i] <= v.values[i] ? 1.0 : nearness_value(params, u.values[i] - v.values[i]);
    at_least = tnorm_value(tnorm, at_least, a);
    const double v_at_least =
        v.values[i] <= u.values[i] ? 1.0 : nearness_value(params, v.values[i] - u.values[i]);
    strictly = std::max(strictly, 1.0 - v_at_least);
  }
  return Grade(tnorm_value(tnorm, at_least, strictly));
}

SkylineResult fuzzy_skyline(const std::vector<CandidateTuple>& cands, const SkylineQuery& q) {
  check_dimensions(cands);
  SkylineResult result;
  for (const CandidateTuple& u : cands) {
    double worst = 0.0;
    for (const CandidateTuple& v : cands) {
      if (&v == &u) continue;
      worst = std::max(worst, fuzzy_dominance(v, u, q.params, q.tnorm).value());
      if (worst >= 1.0) break;
    }
    const double grade = 1.0 - worst;
    if (grade >= q.min_c.value()) {
      result.entries.push_back(SkylineEntry{u.region_id, Grade(grade), u.values});
    }
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const SkylineEntry& a, const SkylineEntry& b) {
              if (a.grade.value() != b.grade.value()) return a.grade.value() > b.grade.value();
              return a.region_id < b.region_id;
            });
  return result;
}

}  // namespace frcc
