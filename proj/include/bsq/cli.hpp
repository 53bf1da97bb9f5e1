#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;  // bad config file or command line
inline constexpr int kExitNumerical = 3;

/// Entire command line, argv[0] excluded. Never throws; returns an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsq::cli
