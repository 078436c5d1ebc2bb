#pragma once

#include <optional>
#include <ostream>

namespace isosum {

/// Command-line entry point. Exit codes: 0 success, 1 failed verification,
/// 2 input or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Tolerance from ISOSUM_TOL, if set. Throws ValidationError when the value
/// is not a positive finite number.
std::optional<double> tolerance_from_env();

}  // namespace isosum
