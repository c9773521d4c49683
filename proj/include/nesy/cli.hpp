#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nesy {

/// Runs the `nesy` command line (args exclude the program name). Results go
/// to `out`, diagnostics to `err`. Returns 0 (ok), 1 (document errors) or 2
/// (usage, I/O or catalog failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nesy
