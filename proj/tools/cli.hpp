#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace labelcode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDecodeFailure = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr const char* kDecodeFailSentinel = "!DECODE_FAIL";

// Runs one subcommand; args excludes the program name. --in/--out override
// the given streams.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace labelcode::cli
