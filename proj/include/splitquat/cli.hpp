#pragma once

#include <iosfwd>
#include <string>

#include "splitquat/solset.hpp"

namespace splitquat {

/// Entry point of the `splitquat` command. Exit codes: 0 success, 1 usage or
/// parse error, 2 no solution (solve) or check failed (verify, fuzz).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One-line parametrization of a component, e.g.
/// "x = 1 + x1·(0.7071067812i + 0.7071067812j)".
std::string describe(const SolutionComponent& c);

}  // namespace splitquat
