#ifndef KDC_CLI_HPP_
#define KDC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace kdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsageError = 3;

// Runs one command. `args` excludes the program name. The report goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdc::cli

#endif  // KDC_CLI_HPP_
