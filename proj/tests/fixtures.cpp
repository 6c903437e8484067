#include "fixtures.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace frcc::testing {

Polygon rect(double x0, double y0, double x1, double y1) {
  Polygon p;
  p.exterior.vertices = {Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}};
  return p;
}

FuzzyRegion rect_region(double x0, double y0, double x1, double y1, double sr) {
  return FuzzyRegion{Geometry{rect(x0, y0, x1, y1)}, sr};
}

Polygon convex_polygon(double cx, double cy, double rx, double ry, int n, double rot) {
  Polygon p;
  for (int k = 0; k < n; ++k) {
    const double t = rot + 2.0 * M_PI * k / n;
    p.exterior.vertices.push_back(Point{cx + rx * std::cos(t), cy + ry * std::sin(t)});
  }
  return p;
}

FuzzyRegion convex_region(double cx, double cy, double rx, double ry, int n, double sr) {
  return FuzzyRegion{Geometry{convex_polygon(cx, cy, rx, ry, n)}, sr};
}

double max_cell_diagonal(const Geometry& a, const Geometry& b, int dd) {
  const auto diag = [dd](const Geometry& g) {
    const BoundingBox bb = bounding_box(g);
    return std::hypot(bb.width(), bb.height()) / dd;
  };
  return std::max(diag(a), diag(b));
}

std::vector<ConnCase> convex_pair_suite() {
  const NearnessParams wide{0.0, 2.5};
  const NearnessParams offset{0.5, 2.5};
  const auto hex = [](double cx, double cy, double r, double sr) {
    return convex_region(cx, cy, r, r, 6, sr);
  };
  const auto tri = [](double cx, double cy, double r, double sr) {
    return convex_region(cx, cy, r, r, 3, sr);
  };
  std::vector<ConnCase> cases;
  const auto add = [&](std::string label, FuzzyRegion a, FuzzyRegion b, NearnessParams np,
                       TNormKind t) {
    cases.push_back(ConnCase{std::move(label), std::move(a), std::move(b), np, t});
  };

  add("identical squares", rect_region(0, 0, 1, 1), rect_region(0, 0, 1, 1), wide,
      TNormKind::Lukasiewicz);
  add("gap 0.5 squares", rect_region(0, 0, 1, 1), rect_region(1.5, 0, 2.5, 1), wide,
      TNormKind::Lukasiewicz);
  add("gap 1.5 squares", rect_region(0, 0, 1, 1), rect_region(2.5, 0, 3.5, 1), wide,
      TNormKind::Lukasiewicz);
  add("out of reach", rect_region(0, 0, 1, 1), rect_region(3.6, 0, 4.6, 1), wide,
      TNormKind::Lukasiewicz);
  add("gap 0.5 fuzzy squares", rect_region(0, 0, 1, 1, 0.5), rect_region(1.5, 0, 2.5, 1, 0.5),
      wide, TNormKind::Lukasiewicz);
  add("rect vs hexagon gap 1", rect_region(0, 0, 1, 1, 0.5), hex(3.0, 0.5, 1.0, 0.5), wide,
      TNormKind::Lukasiewicz);
  add("hexagons gap 1.0", hex(0, 0, 0.6, 0.0), hex(2.2, 0, 0.6, 0.0), wide, TNormKind::Minimum);
  add("triangle vs rect gap 1.2", tri(0, 0, 1.0, 0.0), rect_region(2.2, -0.5, 3.2, 0.5), wide,
      TNormKind::Minimum);
  add("overlapping rects", rect_region(0, 0, 1, 1), rect_region(0.5, 0.25, 1.5, 1.25), wide,
      TNormKind::Minimum);
  add("nested rects", rect_region(0, 0, 2, 2), rect_region(0.5, 0.5, 1.5, 1.5), wide,
      TNormKind::Product);
  add("gap 0.7 product", rect_region(0, 0, 1, 1), rect_region(1.7, 0, 2.7, 1), wide,
      TNormKind::Product);
  add("gap 1.8 fuzzy product", rect_region(0, 0, 1, 1, 0.5), rect_region(2.8, 0, 3.8, 1, 0.5),
      wide, TNormKind::Product);
  add("thin vs wide gap 1", rect_region(0, 0, 0.4, 2), rect_region(1.4, 0.5, 3.4, 1.5), wide,
      TNormKind::Lukasiewicz);
  add("touching hexagons", hex(0, 0, 1.0, 0.0), hex(1.9, 0, 1.0, 0.0), wide, TNormKind::Minimum);
  add("gap 0.3 with alpha", rect_region(0, 0, 1, 1), rect_region(1.3, 0, 2.3, 1), offset,
      TNormKind::Lukasiewicz);
  add("gap 1 with alpha crisp", rect_region(0, 0, 1, 1), rect_region(2.0, 0, 3.0, 1), offset,
      TNormKind::Minimum);
  add("triangles gap 1.5", tri(0, 0, 1.0, 0.5), tri(3.2, 0.2, 1.0, 0.5), wide,
      TNormKind::Lukasiewicz);
  add("rect vs triangle fuzzy", rect_region(0, 0, 1, 1, 0.25), tri(3.5, 0.5, 1.0, 0.25), wide,
      TNormKind::Product);
  add("far apart", rect_region(0, 0, 1, 1, 0.5), rect_region(8, 0, 9, 1, 0.5), wide,
      TNormKind::Lukasiewicz);
  add("octagon vs rect gap 1.1", convex_region(0, 0, 1.0, 0.8, 8, 0.25),
      rect_region(2.1, -0.5, 3.1, 0.5, 0.25), wide, TNormKind::Lukasiewicz);
  return cases;
}

std::vector<RccCase> fig1_cases() {
  std::vector<RccCase> cases;
  const int dd = 32;
  const auto make = [&](const char* rel, FuzzyRegion a, FuzzyRegion b) {
    const double beta = max_cell_diagonal(a.core, b.core, dd);
    cases.push_back(
        RccCase{rel, std::move(a), std::move(b),
                ConnectionConfig{NearnessParams{0.0, beta}, TNormKind::Lukasiewicz, dd}});
  };
  make("DC", rect_region(0, 0, 1, 1), rect_region(11, 0, 12, 1));
  make("EC", rect_region(0, 0, 0.1, 0.1), rect_region(0.1005, 0, 1.1005, 1));
  make("PO", rect_region(0, 0, 1, 1), rect_region(0.5, 0, 1.5, 1));
  make("TPP", rect_region(0, 0.2, 0.6, 0.8), rect_region(0, 0, 1, 1));
  make("NTPP", rect_region(0.3, 0.3, 0.7, 0.7), rect_region(0, 0, 1, 1));
  make("EQ", rect_region(0, 0, 1, 1), rect_region(0, 0, 1, 1));
  return cases;
}

FuzzyRegion random_fixture_region(std::mt19937_64& rng) {
  const auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  const double sr = (rng() % 2 == 0) ? 0.0 : uniform(0.1, 1.5);
  for (int attempt = 0; attempt < 20; ++attempt) {
    FuzzyRegion r;
    if (rng() % 2 == 0) {
      const double x0 = uniform(0, 5), y0 = uniform(0, 5);
      r = rect_region(x0, y0, x0 + uniform(0.6, 2.0), y0 + uniform(0.6, 2.0), sr);
    } else {
      r = convex_region(uniform(0, 5), uniform(0, 5), uniform(0.5, 1.5), uniform(0.5, 1.5),
                        5 + static_cast<int>(rng() % 5), sr);
    }
    // Self-connection must be able to witness a full-membership lattice point.
    const SampledRegion s = SampledRegion::corners(r, 8);
    for (double m : s.memb) {
      if (m >= 1.0) return r;
    }
  }
  return rect_region(0, 0, 1, 1, sr);
}

Dataset skyline_dataset31() {
  // Integer lattice factors: all first coordinates distinct, all second
  // coordinates distinct, scaled by 0.35 so every nonzero difference is
  // well above the 0.05 monotonicity margin. Crisp skyline = {101, 107, 113}.
  static const int kFactors[31][2] = {
      {0, 12}, {1, 30}, {2, 28}, {3, 26}, {4, 24},  {5, 22},  {6, 6},   {7, 11},
      {8, 10}, {9, 9},  {10, 8}, {11, 7}, {12, 0},  {13, 1},  {14, 2},  {15, 3},
      {16, 4}, {17, 5}, {18, 13}, {19, 14}, {20, 15}, {21, 16}, {22, 17}, {23, 18},
      {24, 19}, {25, 20}, {26, 21}, {27, 23}, {28, 25}, {29, 27}, {30, 29}};
  Dataset ds;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 31; ++i) {
    RegionRecord rec;
    rec.id = 101 + i;
    rec.name = "area-" + std::to_string(rec.id);
    const double x = 0.35 * kFactors[i][0];
    const double y = 0.35 * kFactors[i][1];
    rec.fuzzy = rect_region(x, y, x + 1.0, y + 1.0);
    const double u1 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    rec.attributes["skin"] = std::floor(u1 * 400.0) / 1000.0;
    rec.attributes["breast"] = std::floor(u2 * 250.0) / 1000.0;
    ds.records.push_back(std::move(rec));
  }
  RegionRecord west;
  west.id = 901;
  west.name = "west-plant";
  west.fuzzy = rect_region(-11, -60, -10, 60);
  ds.records.push_back(std::move(west));
  RegionRecord south;
  south.id = 902;
  south.name = "south-plant";
  south.fuzzy = rect_region(-60, -11, 60, -10);
  ds.records.push_back(std::move(south));
  return ds;
}

std::vector<std::int64_t> skyline_target_ids() { return {901, 902}; }

Dataset demo4_dataset() {
  Dataset ds;
  const double coords[4][2] = {{1, 3}, {2, 2}, {3, 1}, {3, 3}};
  for (int i = 0; i < 4; ++i) {
    RegionRecord rec;
    rec.id = i + 1;
    rec.name = "cand-" + std::to_string(rec.id);
    rec.fuzzy = rect_region(coords[i][0], coords[i][1], coords[i][0] + 1.0, coords[i][1] + 1.0);
    ds.records.push_back(std::move(rec));
  }
  RegionRecord west;
  west.id = 100;
  west.fuzzy = rect_region(-2, -20, 0, 20);
  ds.records.push_back(std::move(west));
  RegionRecord south;
  south.id = 200;
  south.fuzzy = rect_region(-20, -2, 20, 0);
  ds.records.push_back(std::move(south));
  return ds;
}

std::string cli_path() { return FRCC_CLI_PATH; }

int run_cli(const std::string& args, std::string* stdout_text) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string captured;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, n);
  const int status = pclose(pipe);
  if (stdout_text) *stdout_text = captured;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_dir() {
  static const std::string dir = [] {
    auto path = std::filesystem::temp_directory_path() /
                ("frcc-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
    return path.string();
  }();
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace frcc::testing
