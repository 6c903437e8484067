#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frcc/rcc.hpp"

namespace frcc {

// Raised for unreadable or malformed input files; the message names the
// offending line or feature.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegionRecord {
  std::int64_t id = 0;
  std::string name;
  FuzzyRegion fuzzy;
  std::map<std::string, double> attributes;
};

struct Dataset {
  std::vector<RegionRecord> records;
  std::string units_note;
};

// Reads a GeoJSON FeatureCollection (Polygon/MultiPolygon features with an
// integer `id` property) or a WKT file with one `id<TAB>WKT` line each.
// Support radii start at 0. Numeric properties become attributes.
Dataset load_regions(const std::string& path);
Dataset parse_regions(const std::string& text);

// Writes the dataset back out as a GeoJSON FeatureCollection.
void save_regions(const Dataset& ds, const std::string& path);
std::string regions_geojson(const Dataset& ds);

const RegionRecord* find_region(const Dataset& ds, std::int64_t id);

Dataset with_uniform_support_radius(Dataset ds, double r);

// Radii drawn uniformly from [lo, hi] with a mt19937_64 generator scaled to
// 53-bit doubles, so results are identical across platforms for a seed.
Dataset with_random_support_radii(Dataset ds, double lo, double hi, std::uint64_t seed);

struct OverlapRow {
  std::int64_t id = 0;
  std::string name;
  double overlap = 0.0;
  std::vector<std::optional<double>> attributes;  // parallel to attribute_keys
};

struct OverlapReport {
  std::vector<std::string> attribute_keys;
  std::vector<OverlapRow> rows;                  // overlap descending, ties by id
  std::vector<std::optional<double>> spearman;   // rank correlation per key
};

OverlapReport overlap_report(const Dataset& ds, const FuzzyRegion& layer,
                             const ConnectionConfig& cfg,
                             const std::vector<std::string>& attribute_keys);

struct ThresholdClassification {
  std::vector<double> thresholds;  // strictly descending, in (0, 1]
  std::vector<double> grades;      // connection to seed, parallel to records
  std::vector<int> classes;        // first threshold index met, -1 = unreached
};

ThresholdClassification threshold_classification(const Dataset& ds,
                                                 std::int64_t seed_region_id,
                                                 const ConnectionConfig& cfg,
                                                 const std::vector<double>& thresholds);

// The dataset re-emitted as GeoJSON with an integer `class` property.
std::string classified_geojson(const Dataset& ds, const ThresholdClassification& tc);

// Spearman rank correlation with average ranks for ties.
double spearman_rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

// Locale-independent fixed decimal formatting.
std::string format_fixed(double v, int precision);

std::string overlap_report_csv(const OverlapReport& r, int precision);

}  // namespace frcc
