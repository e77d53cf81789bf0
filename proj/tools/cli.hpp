#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordgroups::cli {

enum ExitStatus { Ok = 0, DomainFailure = 1, UsageFailure = 2, BudgetFailure = 3 };

/// Runs one command line (args excludes the program name). Results go to
/// `out` as line-oriented key=value text, diagnostics to `err`.
int dispatch(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace ordgroups::cli
