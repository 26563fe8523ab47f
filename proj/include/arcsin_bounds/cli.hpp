#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arcsin_bounds/grid.hpp"

namespace asinb::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FormatKind { Csv, Json };

struct OutputFormat {
    FormatKind kind = FormatKind::Csv;
    int precision = 17;  ///< significant digits, 1..17
};

/// "start:end:count" or a bare count (over [0, 1]); counts may be written as 1e6.
[[nodiscard]] GridSpec parse_grid(std::string_view text, bool chebyshev);

/// Shortest-form general notation with `precision` significant digits.
[[nodiscard]] std::string format_number(double v, int precision);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asinb::cli
