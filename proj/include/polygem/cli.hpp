#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polygem {

enum ExitCode : int { ExitOk = 0, ExitVerificationFailed = 1, ExitInputError = 2 };

/// Runs one `polygem <verb> ...` invocation. The report goes to `out` (or to
/// the --output file), diagnostics to `err`. Nothing is written to the report
/// sink unless the command produced a complete report.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polygem
