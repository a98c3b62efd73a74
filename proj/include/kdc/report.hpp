#ifndef KDC_REPORT_HPP_
#define KDC_REPORT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdc/reductions.hpp"
#include "kdc/solver.hpp"

namespace kdc {

inline constexpr int kReportFormatVersion = 1;

struct ReportStats {
  int64_t nodes = 0;
  std::array<int64_t, kNumRules> rule_fires{};
  int64_t reduction_prunes = 0;
  int64_t bound_prunes = 0;
  int max_depth = 0;
  int initial_size = 0;
  int reduced_n = 0;
  int64_t reduced_m = 0;
  double preprocess_seconds = 0;
  double elapsed_seconds = 0;

  friend bool operator==(const ReportStats&, const ReportStats&) = default;
};

ReportStats make_report_stats(const SearchStats& stats);

struct SolutionRecord {
  int size = 0;
  std::vector<std::string> vertices;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

// Everything one CLI invocation prints. Optional fields are absent from the
// output when unset.
struct RunReport {
  int format_version = kReportFormatVersion;
  std::string mode;
  std::string input;
  std::optional<int> k;
  int size = 0;
  std::vector<std::string> vertices;  // input labels
  bool optimal = false;
  std::optional<ReportStats> stats;
  // topr: one record per solution, in discovery order.
  std::vector<SolutionRecord> records;
  std::optional<bool> disjoint;
  // gamma mode.
  std::optional<double> gamma;
  // --compare-eq1: the basic coloring bound at the root.
  std::optional<int64_t> eq1_bound;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

enum class ReportFormat { kText, kJson };

std::string emit_report(const RunReport& report, ReportFormat format);

// Inverse of emit_report(..., kJson). Throws std::invalid_argument on a
// malformed document or an unknown format version.
RunReport parse_json_report(const std::string& text);

}  // namespace kdc

#endif  // KDC_REPORT_HPP_
