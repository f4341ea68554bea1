#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterhodge::cli {

/// Exit codes: 0 success, 1 bad input or other error, 2 case left open,
/// 3 verification verdict FAIL.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace clusterhodge::cli
