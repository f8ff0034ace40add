#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphclust::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2 };

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1..10", "1,2,4" or a single count into a worker list.
std::vector<unsigned> parse_worker_list(const std::string& spec);

}  // namespace graphclust::cli
