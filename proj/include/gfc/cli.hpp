#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gfc/moduli.hpp"

namespace gfc {

/// Runtime knobs shared by every subcommand.
struct RunConfig {
  SearchLimits limits;
  bool json_output = false;
};

/// Exit codes: 0 success; 2 usage or parse error; 3 numerical failure
/// (NoLift, NotFiniteOrder, CapExceeded, ...); 4 theorem-conformance
/// violation in `verify`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Cycle notation helpers for 0-based permutations: "(1 2)(3 4)" <-> perm.
std::vector<int> parse_cycles(const std::string& text, int size);
std::string cycles_to_string(const std::vector<int>& perm);

}  // namespace gfc
