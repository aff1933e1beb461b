#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qsu2/spingeom.hpp"

namespace qsu2::cli {

/// Parses "isospectral", "qdirac" or four comma-separated constants c1u,c2u,c1d,c2d.
DiracSpec parse_dirac(std::string_view text);

/// Parses "8", "8.5" or "17/2"; throws UsageError for anything else or a negative value.
HalfInteger parse_half_integer(std::string_view text);

/// Parses a decimal q exactly as written; throws UsageError unless 0 < q < 1.
double parse_q(std::string_view text);

/// Entry point shared by the executable and the tests. Returns the process exit code:
/// 0 on success (for verify: the suite passed), 1 when the suite fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsu2::cli
