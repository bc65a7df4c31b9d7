#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chromasum {

/// Runs one `chromasum` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on math-layer errors or failed checks, 2 on flag errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromasum
