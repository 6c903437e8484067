#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frcc/skyline.hpp"

namespace {

using namespace frcc;

struct CommonOpts {
  double alpha = 0.0;
  double beta = 0.01;
  int dd = 8;
  std::string tnorm = "lukasiewicz";
  double min_c = 0.01;
  double sr_uniform = -1.0;  // < 0 means unset
  std::vector<double> sr_random;
  std::uint64_t seed = 0;
  int precision = 4;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--alpha", o.alpha, "Nearness alpha (full nearness within this distance)");
  cmd->add_option("--beta", o.beta, "Nearness beta (ramp width beyond alpha)");
  cmd->add_option("--dd", o.dd, "Grid divisions per dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--tnorm", o.tnorm, "T-norm: lukasiewicz, minimum or product")
      ->check(CLI::IsMember({"lukasiewicz", "minimum", "product"}));
  cmd->add_option("--min-c", o.min_c, "Fuzzy skyline inclusion threshold");
  cmd->add_option("--sr-uniform", o.sr_uniform, "Assign this support radius to every region");
  cmd->add_option("--sr-random", o.sr_random,
                  "Assign seeded random support radii from [LO, HI]")
      ->expected(2);
  cmd->add_option("--seed", o.seed, "Seed for --sr-random");
  cmd->add_option("--precision", o.precision, "Decimal places in printed grades")
      ->check(CLI::Range(0, 17));
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

TNormKind tnorm_kind(const std::string& name) {
  if (name == "minimum") return TNormKind::Minimum;
  if (name == "product") return TNormKind::Product;
  return TNormKind::Lukasiewicz;
}

ConnectionConfig make_config(const CommonOpts& o) {
  return ConnectionConfig{NearnessParams{o.alpha, o.beta}, tnorm_kind(o.tnorm), o.dd};
}

Dataset load_dataset(const std::string& path, const CommonOpts& o) {
  Dataset ds = load_regions(path);
  if (!ds.units_note.empty()) std::cerr << "note: " << ds.units_note << "\n";
  if (o.sr_random.size() == 2) {
    ds = with_random_support_radii(std::move(ds), o.sr_random[0], o.sr_random[1], o.seed);
  } else if (o.sr_uniform >= 0.0) {
    ds = with_uniform_support_radius(std::move(ds), o.sr_uniform);
  }
  return ds;
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + out_path);
  out << content;
}

const RegionRecord& region_or_fail(const Dataset& ds, std::int64_t id) {
  const RegionRecord* rec = find_region(ds, id);
  if (!rec) throw std::invalid_argument("no region " + std::to_string(id));
  return *rec;
}

int run_relate(const std::string& dataset, std::int64_t id_a, std::int64_t id_b,
               const CommonOpts& o) {
  const Dataset ds = load_dataset(dataset, o);
  const RegionRecord& a = region_or_fail(ds, id_a);
  const RegionRecord& b = region_or_fail(ds, id_b);
  const RelationVector v = relation_vector(a.fuzzy, b.fuzzy, make_config(o));
  std::string text;
  for (std::string_view name : kRelationNames) {
    std::string line(name);
    line.append(name.size() < 9 ? 9 - name.size() : 1, ' ');
    line += format_fixed(relation_component(v, name).value(), o.precision);
    text += line + "\n";
  }
  write_output(text, o.out);
  return 0;
}

int run_matrix(const std::string& dataset, const std::string& relation, const CommonOpts& o) {
  bool known = false;
  for (std::string_view name : kRelationNames)
    if (relation == name) known = true;
  if (!known) throw std::invalid_argument("unknown relation name: " + relation);

  const Dataset ds = load_dataset(dataset, o);
  const ConnectionConfig cfg = make_config(o);
  std::string csv = "id";
  for (const RegionRecord& rec : ds.records) csv += "," + std::to_string(rec.id);
  csv += "\n";
  for (const RegionRecord& row : ds.records) {
    csv += std::to_string(row.id);
    for (const RegionRecord& col : ds.records) {
      const RelationVector v = relation_vector(row.fuzzy, col.fuzzy, cfg);
      csv += "," + format_fixed(relation_component(v, relation).value(), o.precision);
    }
    csv += "\n";
  }
  write_output(csv, o.out);
  return 0;
}

int run_skyline(const std::string& dataset, const std::vector<std::int64_t>& target_ids,
                const std::string& target_file, const std::string& mode, bool crisp,
                const CommonOpts& o) {
  const Dataset ds = load_dataset(dataset, o);
  SkylineQuery q;
  q.mode = mode == "connection" ? SkylineMode::ConnectionBased : SkylineMode::DistanceOnly;
  q.params = NearnessParams{o.alpha, o.beta};
  q.min_c = Grade(o.min_c);
  q.tnorm = tnorm_kind(o.tnorm);
  q.cfg = make_config(o);

  std::vector<RegionRecord> candidates;
  if (!target_file.empty()) {
    const Dataset targets = load_dataset(target_file, o);
    for (const RegionRecord& rec : targets.records) q.targets.push_back(rec.fuzzy);
    candidates = ds.records;
  } else {
    if (target_ids.empty())
      throw std::invalid_argument("skyline: provide --targets or --target-file");
    for (std::int64_t id : target_ids) q.targets.push_back(region_or_fail(ds, id).fuzzy);
    for (const RegionRecord& rec : ds.records) {
      if (std::find(target_ids.begin(), target_ids.end(), rec.id) == target_ids.end())
        candidates.push_back(rec);
    }
  }
  if (candidates.empty()) throw std::invalid_argument("skyline: empty candidate set");

  const std::vector<CandidateTuple> cands = build_candidates(candidates, q);
  std::string csv = "id,grade";
  for (std::size_t i = 0; i < q.targets.size(); ++i) csv += ",value_" + std::to_string(i);
  csv += "\n";
  if (crisp) {
    std::vector<std::int64_t> ids = crisp_skyline(cands);
    std::sort(ids.begin(), ids.end());
    for (std::int64_t id : ids) {
      for (const CandidateTuple& c : cands) {
        if (c.region_id != id) continue;
        csv += std::to_string(id) + "," + format_fixed(1.0, o.precision);
        for (double v : c.values) csv += "," + format_fixed(v, o.precision);
        csv += "\n";
      }
    }
  } else {
    const SkylineResult result = fuzzy_skyline(cands, q);
    for (const SkylineEntry& e : result.entries) {
      csv += std::to_string(e.region_id) + "," + format_fixed(e.grade.value(), o.precision);
      for (double v : e.values) csv += "," + format_fixed(v, o.precision);
      csv += "\n";
    }
  }
  write_output(csv, o.out);
  return 0;
}

int run_thresholds(const std::string& dataset, std::int64_t seed_region,
                   const std::vector<double>& thresholds, const CommonOpts& o) {
  const Dataset ds = load_dataset(dataset, o);
  const ThresholdClassification tc =
      threshold_classification(ds, seed_region, make_config(o), thresholds);
  write_output(classified_geojson(ds, tc), o.out);
  return 0;
}

int run_overlap_report(const std::string& dataset, const std::string& layer_file,
                       const std::vector<std::string>& attributes, const CommonOpts& o) {
  const Dataset ds = load_dataset(dataset, o);
  const Dataset layer_ds = load_regions(layer_file);
  MultiPolygon layer_core;
  for (const RegionRecord& rec : layer_ds.records) {
    if (const auto* poly = std::get_if<Polygon>(&rec.fuzzy.core)) layer_core.push_back(*poly);
    if (const auto* mp = std::get_if<MultiPolygon>(&rec.fuzzy.core))
      layer_core.insert(layer_core.end(), mp->begin(), mp->end());
  }
  FuzzyRegion layer{Geometry{layer_core}, o.sr_uniform >= 0.0 ? o.sr_uniform : 0.0};

  const OverlapReport report = overlap_report(ds, layer, make_config(o), attributes);
  write_output(overlap_report_csv(report, o.precision), o.out);
  for (std::size_t k = 0; k < report.attribute_keys.size(); ++k) {
    std::cout << "spearman," << report.attribute_keys[k] << ",";
    if (report.spearman[k].has_value())
      std::cout << format_fixed(*report.spearman[k], o.precision);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy spatial relations engine: graded RCC relations and fuzzy skyline "
               "queries over vague regions"};
  app.require_subcommand(1);

  CommonOpts o;

  std::string dataset;
  std::int64_t id_a = 0, id_b = 0;
  auto* relate = app.add_subcommand("relate", "Print all relation grades for a region pair");
  relate->add_option("dataset", dataset)->required();
  relate->add_option("id_a", id_a)->required();
  relate->add_option("id_b", id_b)->required();
  add_common(relate, o);

  std::string relation;
  auto* matrix = app.add_subcommand("matrix", "Pairwise relation matrix as CSV");
  matrix->add_option("dataset", dataset)->required();
  matrix->add_option("relation", relation)->required();
  add_common(matrix, o);

  std::vector<std::int64_t> target_ids;
  std::string target_file, mode = "distance";
  bool crisp = false;
  auto* skyline = app.add_subcommand("skyline", "Fuzzy (or crisp) skyline query as CSV");
  skyline->add_option("dataset", dataset)->required();
  skyline->add_option("--targets", target_ids, "Target region ids from the dataset")
      ->delimiter(',');
  skyline->add_option("--target-file", target_file, "GeoJSON/WKT file with target regions");
  skyline->add_option("--mode", mode, "Candidate values: distance or connection")
      ->check(CLI::IsMember({"distance", "connection"}));
  skyline->add_flag("--crisp", crisp, "Classic non-dominated skyline, no grading");
  add_common(skyline, o);

  std::int64_t seed_region = 0;
  std::vector<double> thresholds;
  auto* thr = app.add_subcommand("thresholds",
                                 "Classify regions by connection to a seed region (GeoJSON)");
  thr->add_option("dataset", dataset)->required();
  thr->add_option("--seed-region", seed_region, "Seed region id")->required();
  thr->add_option("--thresholds", thresholds, "Strictly descending grades in (0,1]")
      ->required()
      ->delimiter(',');
  add_common(thr, o);

  std::string layer_file;
  std::vector<std::string> attributes;
  auto* rep = app.add_subcommand("overlap-report",
                                 "Rank regions by overlap with a layer (CSV + Spearman)");
  rep->add_option("dataset", dataset)->required();
  rep->add_option("--layer", layer_file, "GeoJSON/WKT file with the layer geometry")->required();
  rep->add_option("--attributes", attributes, "Attribute keys to include")->delimiter(',');
  add_common(rep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (relate->parsed()) return run_relate(dataset, id_a, id_b, o);
    if (matrix->parsed()) return run_matrix(dataset, relation, o);
    if (skyline->parsed())
      return run_skyline(dataset, target_ids, target_file, mode, crisp, o);
    if (thr->parsed()) return run_thresholds(dataset, seed_region, thresholds, o);
    if (rep->parsed()) return run_overlap_report(dataset, layer_file, attributes, o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
