#include "sonc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sonc/generated.hpp"

namespace sonc {

using nlohmann::ordered_json;

RunInfo RunInfo::of(std::string command, const SampleSet& s) {
  return {std::move(command), s.plan, s.size(), s.raw_draws, std::string(generated::kBuildId)};
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

double rounded(double value, int decimals) { return std::stod(fixed(value, decimals)); }

namespace {

std::string box_text(double box) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << box;
  return os.str();
}

ordered_json meta(const RunInfo& info) {
  return ordered_json{{"command", info.command},
                      {"seed", info.plan.seed},
                      {"n", info.samples},
                      {"raw_draws", info.raw_draws},
                      {"box", info.plan.box},
                      {"build", info.build_id}};
}

std::string cover_label(int id) { return "CC(" + std::to_string(id) + ")"; }

}  // namespace

std::string csv_header(const RunInfo& info, const std::string& columns) {
  std::string out = "# sonc-mono " + info.command + "\n";
  out += "# seed=" + std::to_string(info.plan.seed) + " n=" + std::to_string(info.samples) +
         " raw_draws=" + std::to_string(info.raw_draws) + " box=" + box_text(info.plan.box) +
         " build=" + info.build_id + "\n";
  out += "# columns: " + columns + "\n";
  return out;
}

std::string table1_csv(const RunInfo& info, const CoverHitMatrix& m) {
  std::string out = csv_header(info, "cover,hits,ratio");
  out += "cover,hits,ratio\n";
  out += "Sigma," + std::to_string(m.union_count) + "," + fixed(m.union_ratio(), 5) + "\n";
  for (int id : m.cover_ids) {
    out += cover_label(id) + "," + std::to_string(m.count(id)) + "," + fixed(m.ratio(id), 5) + "\n";
  }
  return out;
}

ordered_json table1_json(const RunInfo& info, const CoverHitMatrix& m) {
  ordered_json rows = ordered_json::array();
  rows.push_back({{"cover", "Sigma"}, {"hits", m.union_count}, {"ratio", rounded(m.union_ratio(), 5)}});
  for (int id : m.cover_ids) {
    rows.push_back({{"cover", cover_label(id)}, {"hits", m.count(id)}, {"ratio", rounded(m.ratio(id), 5)}});
  }
  return ordered_json{{"meta", meta(info)}, {"rows", rows}};
}

std::string table2_csv(const RunInfo& info, const CoverHitMatrix& m, int baseline) {
  std::string out = csv_header(info, "cover,versus,plus,minus,zero (x" + fixed(kTable2Scale, 0) +
                                         " of n),plus_count,minus_count,zero_count");
  out += "cover,versus,plus,minus,zero,plus_count,minus_count,zero_count\n";
  const auto n = m.total();
  for (const auto& r : compare_vs_baseline(m, baseline)) {
    out += cover_label(r.cover) + "," + cover_label(r.versus) + "," +
           fixed(table2_value(r.plus, n), 2) + "," + fixed(table2_value(r.minus, n), 2) + "," +
           fixed(table2_value(r.zero, n), 2) + "," + std::to_string(r.plus) + "," +
           std::to_string(r.minus) + "," + std::to_string(r.zero) + "\n";
  }
  return out;
}

ordered_json table2_json(const RunInfo& info, const CoverHitMatrix& m, int baseline) {
  ordered_json rows = ordered_json::array();
  const auto n = m.total();
  for (const auto& r : compare_vs_baseline(m, baseline)) {
    rows.push_back({{"cover", cover_label(r.cover)},
                    {"versus", cover_label(r.versus)},
                    {"plus", rounded(table2_value(r.plus, n), 2)},
                    {"minus", rounded(table2_value(r.minus, n), 2)},
                    {"zero", rounded(table2_value(r.zero, n), 2)},
                    {"plus_count", r.plus},
                    {"minus_count", r.minus},
                    {"zero_count", r.zero}});
  }
  return ordered_json{{"meta", meta(info)}, {"scale", kTable2Scale}, {"rows", rows}};
}

namespace {

std::string node_label(const HasseNode& node) {
  std::string out;
  for (std::size_t i = 0; i < node.covers.size(); ++i) {
    if (i) out += "=";
    out += std::to_string(node.covers[i]);
  }
  return out;
}

}  // namespace

std::string containment_csv(const RunInfo& info, const ContainmentReport& r) {
  std::string out = csv_header(
      info, "kind,from,to,count; kind is contained, near, hasse or unique (to empty)");
  out += "kind,from,to,count\n";
  for (const auto& e : r.contained) {
    out += "contained," + std::to_string(e.from) + "," + std::to_string(e.to) + "," +
           std::to_string(e.violations) + "\n";
  }
  for (const auto& e : r.near) {
    out += "near," + std::to_string(e.from) + "," + std::to_string(e.to) + "," +
           std::to_string(e.violations) + "\n";
  }
  for (const auto& [lo, hi] : r.hasse) {
    out += "hasse," + node_label(r.nodes[lo]) + "," + node_label(r.nodes[hi]) + ",\n";
  }
  for (std::size_t i = 0; i < r.cover_ids.size(); ++i) {
    out += "unique," + std::to_string(r.cover_ids[i]) + ",," + std::to_string(r.unique_counts[i]) + "\n";
  }
  return out;
}

ordered_json containment_json(const RunInfo& info, const ContainmentReport& r) {
  auto edges = [](const std::vector<ContainmentEdge>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& e : list) out.push_back({{"from", e.from}, {"to", e.to}, {"count", e.violations}});
    return out;
  };
  ordered_json hasse = ordered_json::array();
  for (const auto& [lo, hi] : r.hasse) {
    hasse.push_back({{"from", r.nodes[lo].covers}, {"to", r.nodes[hi].covers}});
  }
  ordered_json unique = ordered_json::object();
  for (std::size_t i = 0; i < r.cover_ids.size(); ++i) {
    unique[std::to_string(r.cover_ids[i])] = r.unique_counts[i];
  }
  return ordered_json{{"meta", meta(info)},
                      {"threshold", r.threshold},
                      {"near_band", r.near_band},
                      {"cover_ids", r.cover_ids},
                      {"difference", r.difference},
                      {"contained", edges(r.contained)},
                      {"near", edges(r.near)},
                      {"hasse", hasse},
                      {"unique", unique}};
}

std::string homotopy_csv(const RunInfo& info, const HomotopyCurve& c) {
  std::string ids;
  for (std::size_t i = 0; i < c.cover_ids.size(); ++i) {
    if (i) ids += ",";
    ids += std::to_string(c.cover_ids[i]);
  }
  const bool simplicial = c.cover_ids.size() == 3;
  const std::string columns = simplicial ? "s,t,hits,ratio" : "t,hits,ratio";
  std::string out = csv_header(info, columns + " for covers " + ids + " delta=" + fixed(c.delta, 6));
  out += columns + "\n";
  for (const auto& p : c.points) {
    if (simplicial) out += fixed(p.s, 6) + ",";
    out += fixed(p.t, 6) + "," + std::to_string(p.hits) + "," + fixed(p.ratio, 5) + "\n";
  }
  return out;
}

ordered_json homotopy_json(const RunInfo& info, const HomotopyCurve& c) {
  const bool simplicial = c.cover_ids.size() == 3;
  ordered_json points = ordered_json::array();
  for (const auto& p : c.points) {
    ordered_json row;
    if (simplicial) row["s"] = rounded(p.s, 6);
    row["t"] = rounded(p.t, 6);
    row["hits"] = p.hits;
    row["ratio"] = rounded(p.ratio, 5);
    points.push_back(std::move(row));
  }
  return ordered_json{{"meta", meta(info)},
                      {"covers", c.cover_ids},
                      {"delta", c.delta},
                      {"points", points}};
}

std::string csv_data_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    out += line + "\n";
  }
  return out;
}

}  // namespace sonc
