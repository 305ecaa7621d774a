#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace area {

inline constexpr int kExitProved = 0;
inline constexpr int kExitDisproved = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitConstruction = 3;
inline constexpr int kExitParse = 4;

/// Runs `areaprove` with `args` (program name excluded). Honors the
/// AREAPROVE_SEED and AREAPROVE_ORACLE_SAMPLES environment variables, which
/// command-line flags override.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace area
