#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unimod::cli {

/// Runs one command line (argv[0] excluded). The JSON result record goes to
/// `out` (or to --out), diagnostics to `err`. Returns the process exit code:
/// 0 ok, 2 inconclusive, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unimod::cli
