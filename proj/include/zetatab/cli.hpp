#pragma once

#include <string>
#include <vector>

#include "zetatab/complex_ops.hpp"

namespace zetatab::cli {

// Exit codes: 0 when every (non-informational) verdict is CONFIRMED or the
// command produces no verdicts; 1 on any FAILED/MIXED/UNDETERMINED verdict;
// 2 on usage or domain errors.
int run(int argc, const char* const* argv);

// Test-friendly entry point: arguments without the program name.
int run(const std::vector<std::string>& args);

// Parses "re", "re+imi", "re-imi" or "imi" (e.g. "2", "1+0.5i", "-2i").
CNum parse_complex(const std::string& text);

}  // namespace zetatab::cli
