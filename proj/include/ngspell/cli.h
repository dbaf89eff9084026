#pragma once

#include <iosfwd>

namespace ngspell {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point behind the `ngspell` binary. `in` is read when `check` has no
/// --input; `out` and `err` stand in for standard output and standard error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ngspell
