#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circnet {

/// Runs one CLI invocation (args exclude the program name). Output is byte
/// deterministic for identical inputs regardless of thread count. Exit
/// status: 0 success / positive verdict, 1 negative verdict, 2 errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circnet
