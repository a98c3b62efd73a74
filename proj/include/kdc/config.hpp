#ifndef KDC_CONFIG_HPP_
#define KDC_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace kdc {

struct SolverConfig {
  // Maximum number of missing edges in a solution.
  int k = 0;
  // Wall-clock limit in seconds for the whole solve, preprocessing included.
  std::optional<double> time_limit_seconds;

  bool enable_ub1 = true;
  bool enable_ub2 = true;
  bool enable_ub3 = true;
  bool enable_rr3 = true;
  bool enable_rr4 = true;
  // Truss reduction during preprocessing.
  bool enable_rr6 = true;
  // Degen-opt instead of Degen for the initial solution.
  bool use_degen_opt = true;

  // Search nodes between two clock reads.
  int64_t node_check_interval = 1024;
  // Only consumed by randomized test harnesses.
  uint64_t seed = 0;

  void validate() const {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (node_check_interval < 1) throw std::invalid_argument("node_check_interval must be >= 1");
    if (time_limit_seconds && *time_limit_seconds < 0) {
      throw std::invalid_argument("time limit must be non-negative");
    }
  }

  // The ablated variants used in the experiments.
  static SolverConfig full(int k) {
    SolverConfig c;
    c.k = k;
    return c;
  }
  static SolverConfig without_ub1(int k) {
    SolverConfig c = full(k);
    c.enable_ub1 = false;
    return c;
  }
  static SolverConfig without_rr34(int k) {
    SolverConfig c = full(k);
    c.enable_rr3 = false;
    c.enable_rr4 = false;
    return c;
  }
  static SolverConfig degen_only(int k) {
    SolverConfig c = full(k);
    c.use_degen_opt = false;
    c.enable_rr6 = false;
    return c;
  }
};

}  // namespace kdc

#endif  // KDC_CONFIG_HPP_
