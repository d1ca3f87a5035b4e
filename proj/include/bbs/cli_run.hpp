#pragma once

#include <string>
#include <vector>

namespace bbs {

// Parses argv-style arguments, runs one job, and writes the JSON result.
// Exit code 0 on success, 1 on structured errors, 2 when a heuristic check
// ends inconclusive.
int cli_run(const std::vector<std::string>& args, std::string& out);

} // namespace bbs
