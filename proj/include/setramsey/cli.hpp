#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

namespace setramsey::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_usage = 2;

/// Entry point for the `setramsey` tool. Subcommands: construct, verify,
/// oracle, bounds, sweep, diagnose. Returns 0 on success or a valid
/// certificate, 1 when verification fails or a certificate is invalid (with a
/// `status=...` line on `out`), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a,b,c", "lo:hi" or "lo:hi:step" (inclusive).
std::vector<std::uint32_t> parse_int_list(std::string_view text);

}  // namespace setramsey::cli
