#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szkit::cli {

// Dispatches one subcommand; JSON goes to `out`, messages to `err`.
// Exit codes: 0 success / assertion passed, 1 assertion failure or fault,
// 2 usage error, 3 undecided at the requested precision.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szkit::cli
