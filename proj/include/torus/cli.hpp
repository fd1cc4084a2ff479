#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torus::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2 };

/// Runs one `torus-rect-tiler` command. `args` excludes the program name.
/// Documents go to `out` (or to the -o path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torus::cli
