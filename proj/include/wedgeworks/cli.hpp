#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgeworks {

/// Exit codes: 0 success, 1 invalid input or failed verification, 2 numerical
/// non-convergence. Errors go to err as one JSON line {"error": kind, "message": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace wedgeworks
