#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace presmon {

/// Runs one command-line invocation; `args` is argv without the program name.
/// Every run writes exactly one JSON document (or requested help text) to
/// `out`. Returns 0 on success or a verified/not-applicable report, 1 when a
/// verification falsifies, 2 on usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace presmon
