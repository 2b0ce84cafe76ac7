#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ridematch/oracle_check.hpp"

namespace ridematch::cli {

/// Parses "1,4,7..9" style lists; ranges are inclusive.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

std::vector<double> parse_value_list(std::string_view text);

/// Entry point shared by the real binary and test builds. Returns the
/// process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const OracleSolvers& solvers = {});

}  // namespace ridematch::cli
