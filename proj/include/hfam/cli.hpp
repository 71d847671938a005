#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfam {

/// Runs the command-line interface on the given arguments (program name
/// excluded). Exit codes: 0 success, 1 operational error (bad input, budget),
/// 2 a conjecture counterexample was found, 3 a proved statement failed
/// (library defect).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfam
