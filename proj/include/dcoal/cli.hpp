#pragma once

#include <iosfwd>

namespace dcoal::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;        ///< validation failure or theorem violation
inline constexpr int exit_input_error = 2;
inline constexpr int exit_resource_limit = 3;

/// Entry point of the dcoal tool, with the standard streams injectable for testing.
/// Subcommands: gen, solve, verify-partition, construct, scan.
auto run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int;

} // namespace dcoal::cli
