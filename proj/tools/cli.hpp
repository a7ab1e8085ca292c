#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extgraph::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name: {"inv", "--family", "petersen", "--json"}.
// Reports go to `out`, diagnostics to `err`; "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extgraph::cli
