#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptp::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kCheckFailed = 2;

/// Runs one command. `args` excludes the program name. Machine-readable JSON
/// goes to `out`; the human summary and usage text go to `err`.
/// `env_tol` is the value of PTP_TOL, if set; an explicit --tol wins.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_tol = std::nullopt);

}  // namespace ptp::cli
