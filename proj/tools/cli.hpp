#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecyl::cli {

// Exit codes: 0 success, 1 verification above tolerance, 2 usage or domain
// error, 3 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr int kSchemaVersion = 1;

// Runs one invocation; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ecyl::cli
