#include "kdc/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kdc {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ' ';
    out += items[i];
  }
  return out;
}

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

json stats_to_json(const ReportStats& s) {
  json fires = json::object();
  for (int r = 0; r < kNumRules; ++r) fires[rule_name(static_cast<Rule>(r))] = s.rule_fires[r];
  return {{"nodes", s.nodes},
          {"rule_fires", fires},
          {"reduction_prunes", s.reduction_prunes},
          {"bound_prunes", s.bound_prunes},
          {"max_depth", s.max_depth},
          {"preprocess",
           {{"initial_size", s.initial_size},
            {"reduced_n", s.reduced_n},
            {"reduced_m", s.reduced_m},
            {"elapsed_seconds", s.preprocess_seconds}}},
          {"elapsed_seconds", s.elapsed_seconds}};
}

ReportStats stats_from_json(const json& j) {
  ReportStats s;
  s.nodes = j.at("nodes").get<int64_t>();
  for (int r = 0; r < kNumRules; ++r) {
    s.rule_fires[r] = j.at("rule_fires").at(rule_name(static_cast<Rule>(r))).get<int64_t>();
  }
  s.reduction_prunes = j.at("reduction_prunes").get<int64_t>();
  s.bound_prunes = j.at("bound_prunes").get<int64_t>();
  s.max_depth = j.at("max_depth").get<int>();
  const json& p = j.at("preprocess");
  s.initial_size = p.at("initial_size").get<int>();
  s.reduced_n = p.at("reduced_n").get<int>();
  s.reduced_m = p.at("reduced_m").get<int64_t>();
  s.preprocess_seconds = p.at("elapsed_seconds").get<double>();
  s.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return s;
}

json to_json(const RunReport& r) {
  json j = {{"format_version", r.format_version},
            {"mode", r.mode},
            {"input", r.input},
            {"size", r.size},
            {"vertices", r.vertices},
            {"optimal", r.optimal}};
  if (r.k) j["k"] = *r.k;
  if (r.stats) j["stats"] = stats_to_json(*r.stats);
  if (!r.records.empty()) {
    json records = json::array();
    for (const auto& rec : r.records) records.push_back({{"size", rec.size}, {"vertices", rec.vertices}});
    j["records"] = records;
  }
  if (r.disjoint) j["disjoint"] = *r.disjoint;
  if (r.gamma) j["gamma"] = *r.gamma;
  if (r.eq1_bound) j["eq1_bound"] = *r.eq1_bound;
  return j;
}

void emit_text(std::ostream& out, const RunReport& r) {
  out << "format_version: " << r.format_version << '\n';
  out << "mode: " << r.mode << '\n';
  if (!r.input.empty()) out << "input: " << r.input << '\n';
  if (r.k) out << "k: " << *r.k << '\n';
  if (r.gamma) {
    out << "gamma: " << format_double(*r.gamma) << '\n';
    return;
  }
  out << "size: " << r.size << '\n';
  out << "optimal: " << (r.optimal ? "true" : "false") << '\n';
  out << "vertices: " << join(r.vertices) << '\n';
  for (size_t i = 0; i < r.records.size(); ++i) {
    out << "record " << i + 1 << ": size " << r.records[i].size << ": "
        << join(r.records[i].vertices) << '\n';
  }
  if (r.disjoint) out << "disjoint: " << (*r.disjoint ? "true" : "false") << '\n';
  if (r.eq1_bound) out << "eq1_bound: " << *r.eq1_bound << '\n';
  if (r.stats) {
    const ReportStats& s = *r.stats;
    out << "nodes: " << s.nodes << '\n';
    out << "rule_fires:";
    for (int i = 0; i < kNumRules; ++i) {
      out << ' ' << rule_name(static_cast<Rule>(i)) << '=' << s.rule_fires[i];
    }
    out << '\n';
    out << "reduction_prunes: " << s.reduction_prunes << '\n';
    out << "bound_prunes: " << s.bound_prunes << '\n';
    out << "max_depth: " << s.max_depth << '\n';
    out << "initial_size: " << s.initial_size << '\n';
    out << "reduced_n: " << s.reduced_n << '\n';
    out << "reduced_m: " << s.reduced_m << '\n';
    out << "preprocess_seconds: " << format_double(s.preprocess_seconds) << '\n';
    out << "elapsed_seconds: " << format_double(s.elapsed_seconds) << '\n';
  }
}

}  // namespace

ReportStats make_report_stats(const SearchStats& stats) {
  ReportStats s;
  s.nodes = stats.nodes;
  s.rule_fires = stats.rule_fires;
  s.reduction_prunes = stats.reduction_prunes;
  s.bound_prunes = stats.bound_prunes;
  s.max_depth = stats.max_depth;
  s.initial_size = stats.preprocess.initial_size;
  s.reduced_n = stats.preprocess.reduced_n;
  s.reduced_m = stats.preprocess.reduced_m;
  s.preprocess_seconds = stats.preprocess.elapsed_seconds;
  s.elapsed_seconds = stats.elapsed_seconds;
  return s;
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return to_json(report).dump(2) + "\n";
  std::ostringstream out;
  emit_text(out, report);
  return out.str();
}

RunReport parse_json_report(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    r.format_version = j.at("format_version").get<int>();
    if (r.format_version != kReportFormatVersion) {
      throw std::invalid_argument("unsupported report format version");
    }
    r.mode = j.at("mode").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.size = j.at("size").get<int>();
    r.vertices = j.at("vertices").get<std::vector<std::string>>();
    r.optimal = j.at("optimal").get<bool>();
    if (j.contains("k")) r.k = j["k"].get<int>();
    if (j.contains("stats")) r.stats = stats_from_json(j["stats"]);
    if (j.contains("records")) {
      for (const auto& rec : j["records"]) {
        r.records.push_back(
            {rec.at("size").get<int>(), rec.at("vertices").get<std::vector<std::string>>()});
      }
    }
    if (j.contains("disjoint")) r.disjoint = j["disjoint"].get<bool>();
    if (j.contains("gamma")) r.gamma = j["gamma"].get<double>();
    if (j.contains("eq1_bound")) r.eq1_bound = j["eq1_bound"].get<int64_t>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace kdc
