#include "frcc/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace frcc {

namespace {

using nlohmann::json;

Ring ring_from_positions(const std::vector<std::pair<double, double>>& pos) {
  Ring r;
  for (const auto& [x, y] : pos) r.vertices.push_back(Point{x, y});
  // GeoJSON and WKT rings repeat the first vertex to close; ours are
  // implicitly closed.
  if (r.vertices.size() >= 2 && r.vertices.front().x == r.vertices.back().x &&
      r.vertices.front().y == r.vertices.back().y) {
    r.vertices.pop_back();
  }
  return r;
}

Ring ring_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() < 3)
    throw ParseError(where + ": ring must be an array of at least 3 positions");
  std::vector<std::pair<double, double>> pos;
  for (const json& p : arr) {
    if (!p.is_array() || p.size() < 2 || !p[0].is_number() || !p[1].is_number())
      throw ParseError(where + ": position must be a [x, y] number pair");
    pos.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return ring_from_positions(pos);
}

Polygon polygon_from_json(const json& rings, const std::string& where) {
  if (!rings.is_array() || rings.empty())
    throw ParseError(where + ": polygon needs at least one ring");
  Polygon poly;
  poly.exterior = ring_from_json(rings[0], where);
  for (std::size_t i = 1; i < rings.size(); ++i)
    poly.holes.push_back(ring_from_json(rings[i], where));
  return poly;
}

// Minimal WKT reader for POLYGON and MULTIPOLYGON.
class WktParser {
 public:
  WktParser(std::string_view text, const std::string& where) : text_(text), where_(where) {}

  Geometry parse() {
    const std::string kw = keyword();
    if (kw == "POLYGON") {
      return polygon();
    }
    if (kw == "MULTIPOLYGON") {
      MultiPolygon mp;
      expect('(');
      mp.push_back(polygon());
      while (accept(',')) mp.push_back(polygon());
      expect(')');
      return mp;
    }
    throw ParseError(where_ + ": non-areal or unsupported WKT geometry '" + kw + "'");
  }

 private:
  std::string keyword() {
    skip_space();
    std::string kw;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      kw.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++]))));
    if (kw.empty()) throw ParseError(where_ + ": expected WKT keyword");
    return kw;
  }

  Polygon polygon() {
    Polygon poly;
    expect('(');
    poly.exterior = ring();
    while (accept(',')) poly.holes.push_back(ring());
    expect(')');
    return poly;
  }

  Ring ring() {
    expect('(');
    std::vector<std::pair<double, double>> pos;
    do {
      const double x = number();
      const double y = number();
      pos.emplace_back(x, y);
    } while (accept(','));
    expect(')');
    return ring_from_positions(pos);
  }

  double number() {
    skip_space();
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError(where_ + ": expected a coordinate number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(where_ + ": expected '" + std::string(1, c) + "' in WKT");
  }

  std::string_view text_;
  std::string where_;
  std::size_t pos_ = 0;
};

Dataset parse_geojson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object() || j.value("type", "") != "FeatureCollection" || !j.contains("features") ||
      !j["features"].is_array()) {
    throw ParseError("parse error: expected a GeoJSON FeatureCollection");
  }
  const json& features = j["features"];
  if (features.empty()) throw ParseError("empty dataset");

  Dataset ds;
  std::set<std::int64_t> seen;
  std::vector<std::string> non_areal;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const json& f = features[i];
    const std::string where = "feature " + std::to_string(i);
    if (!f.is_object() || !f.contains("geometry") || !f["geometry"].is_object())
      throw ParseError(where + ": missing geometry");
    const json& props = f.contains("properties") && f["properties"].is_object()
                            ? f["properties"]
                            : json::object();
    if (!props.contains("id") || !props["id"].is_number_integer())
      throw ParseError(where + ": missing integer property 'id'");
    RegionRecord rec;
    rec.id = props["id"].get<std::int64_t>();
    if (!seen.insert(rec.id).second)
      throw ParseError("duplicate region id " + std::to_string(rec.id));
    if (props.contains("name") && props["name"].is_string())
      rec.name = props["name"].get<std::string>();
    for (const auto& [key, value] : props.items()) {
      if (key == "id" || key == "name") continue;
      if (value.is_number()) rec.attributes[key] = value.get<double>();
    }

    const json& geom = f["geometry"];
    const std::string gtype = geom.value("type", "");
    const std::string gwhere = "feature id " + std::to_string(rec.id);
    if (gtype == "Polygon") {
      rec.fuzzy.core = polygon_from_json(geom["coordinates"], gwhere);
    } else if (gtype == "MultiPolygon") {
      MultiPolygon mp;
      if (!geom["coordinates"].is_array() || geom["coordinates"].empty())
        throw ParseError(gwhere + ": MultiPolygon needs at least one polygon");
      for (const json& poly : geom["coordinates"])
        mp.push_back(polygon_from_json(poly, gwhere));
      rec.fuzzy.core = mp;
    } else {
      non_areal.push_back(std::to_string(rec.id));
      continue;
    }
    try {
      validate_geometry(rec.fuzzy.core);
    } catch (const std::invalid_argument& e) {
      throw ParseError(gwhere + ": " + e.what());
    }
    ds.records.push_back(std::move(rec));
  }
  if (!non_areal.empty()) {
    std::string ids = non_areal.front();
    for (std::size_t i = 1; i < non_areal.size(); ++i) ids += ", " + non_areal[i];
    throw ParseError("non-areal geometry for region id(s): " + ids);
  }
  if (ds.records.empty()) throw ParseError("empty dataset");
  return ds;
}

Dataset parse_wkt_lines(const std::string& text) {
  Dataset ds;
  std::set<std::int64_t> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(lineno);
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(where + ": expected id<TAB>WKT");
    std::int64_t id = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, id);
    if (ec != std::errc{} || ptr != line.data() + tab)
      throw ParseError(where + ": expected an integer id before the tab");
    RegionRecord rec;
    rec.id = id;
    if (!seen.insert(rec.id).second)
      throw ParseError("duplicate region id " + std::to_string(rec.id));
    rec.fuzzy.core = WktParser(std::string_view(line).substr(tab + 1), where).parse();
    try {
      validate_geometry(rec.fuzzy.core);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
    ds.records.push_back(std::move(rec));
  }
  if (ds.records.empty()) throw ParseError("empty dataset");
  return ds;
}

void note_geographic_coordinates(Dataset& ds) {
  bool plausible = !ds.records.empty();
  const auto check = [&](const Point& p) {
    if (std::abs(p.x) > 180.0 || std::abs(p.y) > 90.0) plausible = false;
  };
  for (const RegionRecord& rec : ds.records) {
    std::visit(
        [&](const auto& shape) {
          using T = std::decay_t<decltype(shape)>;
          if constexpr (std::is_same_v<T, Point>) {
            check(shape);
          } else if constexpr (std::is_same_v<T, Polygon>) {
            for (const Point& p : shape.exterior.vertices) check(p);
          } else {
            for (const Polygon& poly : shape)
              for (const Point& p : poly.exterior.vertices) check(p);
          }
        },
        rec.fuzzy.core);
  }
  if (plausible) {
    ds.units_note =
        "coordinates look like lon/lat degrees; distances are computed in planar units";
  }
}

json ring_to_json(const Ring& r) {
  json arr = json::array();
  for (const Point& p : r.vertices) arr.push_back(json::array({p.x, p.y}));
  arr.push_back(json::array({r.vertices.front().x, r.vertices.front().y}));
  return arr;
}

json polygon_to_json(const Polygon& poly) {
  json rings = json::array();
  rings.push_back(ring_to_json(poly.exterior));
  for (const Ring& h : poly.holes) rings.push_back(ring_to_json(h));
  return rings;
}

json geometry_to_json(const Geometry& g) {
  return std::visit(
      [](const auto& shape) -> json {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          return json{{"type", "Point"}, {"coordinates", json::array({shape.x, shape.y})}};
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return json{{"type", "Polygon"}, {"coordinates", polygon_to_json(shape)}};
        } else {
          json coords = json::array();
          for (const Polygon& poly : shape) coords.push_back(polygon_to_json(poly));
          return json{{"type", "MultiPolygon"}, {"coordinates", coords}};
        }
      },
      g);
}

json dataset_to_json(const Dataset& ds, const std::vector<int>* classes) {
  json features = json::array();
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const RegionRecord& rec = ds.records[i];
    json props;
    props["id"] = rec.id;
    if (!rec.name.empty()) props["name"] = rec.name;
    for (const auto& [key, value] : rec.attributes) props[key] = value;
    if (classes) props["class"] = (*classes)[i];
    features.push_back(json{{"type", "Feature"},
                            {"properties", props},
                            {"geometry", geometry_to_json(rec.fuzzy.core)}});
  }
  return json{{"type", "FeatureCollection"}, {"features", features}};
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

Dataset parse_regions(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty dataset");
  Dataset ds = text[first] == '{' ? parse_geojson(text) : parse_wkt_lines(text);
  note_geographic_coordinates(ds);
  return ds;
}

Dataset load_regions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_regions(buf.str());
}

std::string regions_geojson(const Dataset& ds) {
  return dataset_to_json(ds, nullptr).dump(2) + "\n";
}

void save_regions(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << regions_geojson(ds);
}

const RegionRecord* find_region(const Dataset& ds, std::int64_t id) {
  for (const RegionRecord& rec : ds.records)
    if (rec.id == id) return &rec;
  return nullptr;
}

Dataset with_uniform_support_radius(Dataset ds, double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("support radius must be finite and >= 0");
  for (RegionRecord& rec : ds.records) rec.fuzzy.support_radius = r;
  return ds;
}

Dataset with_random_support_radii(Dataset ds, double lo, double hi, std::uint64_t seed) {
  if (!(lo >= 0.0) || !(hi >= lo) || !std::isfinite(hi))
    throw std::invalid_argument("support radius range must satisfy 0 <= lo <= hi");
  std::mt19937_64 rng(seed);
  for (RegionRecord& rec : ds.records) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    rec.fuzzy.support_radius = lo + (hi - lo) * u;
  }
  return ds;
}

OverlapReport overlap_report(const Dataset& ds, const FuzzyRegion& layer,
                             const ConnectionConfig& cfg,
                             const std::vector<std::string>& attribute_keys) {
  if (ds.records.empty()) throw std::invalid_argument("overlap report: empty dataset");
  OverlapReport report;
  report.attribute_keys = attribute_keys;
  for (const RegionRecord& rec : ds.records) {
    OverlapRow row;
    row.id = rec.id;
    row.name = rec.name;
    row.overlap = overlap(rec.fuzzy, layer, cfg).value();
    for (const std::string& key : attribute_keys) {
      const auto it = rec.attributes.find(key);
      row.attributes.push_back(it == rec.attributes.end() ? std::optional<double>{}
                                                          : std::optional<double>{it->second});
    }
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const OverlapRow& a, const OverlapRow& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    return a.id < b.id;
  });
  for (std::size_t k = 0; k < attribute_keys.size(); ++k) {
    std::vector<double> xs, ys;
    for (const OverlapRow& row : report.rows) {
      if (row.attributes[k].has_value()) {
        xs.push_back(row.overlap);
        ys.push_back(*row.attributes[k]);
      }
    }
    if (xs.size() >= 2) {
      const double rho = spearman_rank_correlation(xs, ys);
      report.spearman.push_back(std::isfinite(rho) ? std::optional<double>{rho}
                                                   : std::optional<double>{});
    } else {
      report.spearman.push_back(std::nullopt);
    }
  }
  return report;
}

ThresholdClassification threshold_classification(const Dataset& ds,
                                                 std::int64_t seed_region_id,
                                                 const ConnectionConfig& cfg,
                                                 const std::vector<double>& thresholds) {
  if (thresholds.empty()) throw std::invalid_argument("thresholds: at least one required");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0) || !(thresholds[i] <= 1.0))
      throw std::invalid_argument("thresholds must lie in (0, 1]");
    if (i > 0 && !(thresholds[i] < thresholds[i - 1]))
      throw std::invalid_argument("thresholds must be strictly descending");
  }
  const RegionRecord* seed = find_region(ds, seed_region_id);
  if (!seed) throw std::invalid_argument("no region " + std::to_string(seed_region_id));

  ThresholdClassification tc;
  tc.thresholds = thresholds;
  for (const RegionRecord& rec : ds.records) {
    const double g = connect_grid(rec.fuzzy, seed->fuzzy, cfg).value();
    tc.grades.push_back(g);
    int cls = -1;
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      if (g >= thresholds[k]) {
        cls = static_cast<int>(k);
        break;
      }
    }
    tc.classes.push_back(cls);
  }
  return tc;
}

std::string classified_geojson(const Dataset& ds, const ThresholdClassification& tc) {
  return dataset_to_json(ds, &tc.classes).dump(2) + "\n";
}

double spearman_rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::vector<double> rx = average_ranks(xs);
  const std::vector<double> ry = average_ranks(ys);
  const std::size_t n = rx.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::string format_fixed(double v, int precision) {
  if (v == 0.0) v = std::abs(v);  // normalize -0
  char buf[512];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

std::string overlap_report_csv(const OverlapReport& r, int precision) {
  std::string out = "name,overlap";
  for (const std::string& key : r.attribute_keys) out += "," + csv_escape(key);
  out += "\n";
  for (const OverlapRow& row : r.rows) {
    out += csv_escape(row.name) + "," + format_fixed(row.overlap, precision);
    for (const auto& cell : row.attributes) {
      out += ",";
      if (cell.has_value()) out += format_fixed(*cell, precision);
    }
    out += "\n";
  }
  return out;
}

}  // namespace frcc
