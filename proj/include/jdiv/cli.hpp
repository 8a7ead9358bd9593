#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jdiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;

/// Runs one command. Results go to `out` (or the --out file), errors to `err`
/// as {"error": ...} JSON. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jdiv::cli
