#pragma once

#include "fairdiv/io.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fairdiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report to `out` (or --out). Diagnostics go to `err`. Returns the exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Header plus one line per entry of report["rows"]. Throws NonTabularReport
/// when the report has no rows.
std::string emit_csv(const io::json& report);

std::string sha256_hex(std::string_view data);

}  // namespace fairdiv::cli
