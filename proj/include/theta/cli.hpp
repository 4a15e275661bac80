// Command-line front end: eval, verify, catalog, zeros, reduce.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/types.hpp"

namespace theta::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kUnknownId = 3,
};

/// Parses "A", "A+Bi", "A-Bi", "Bi" with decimal A, B (no exponent, no
/// locale). U+2212 is read as '-'. Returns nullopt on anything else.
std::optional<Complex> parse_complex(std::string_view text);

/// Shortest round-trip decimal form; purely real values print without "i".
std::string format_complex(Complex z);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
