#ifndef SDG_CLI_HPP
#define SDG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdg::cli {

// Exit codes: 0 success, 1 usage error, 2 validation/parse error,
// 3 undefined query (impossible observation, infeasible parameter).
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kUndefined = 3;

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdg::cli

#endif  // SDG_CLI_HPP
