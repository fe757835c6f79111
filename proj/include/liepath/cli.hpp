#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liepath {

/// Runs the command-line front end on already-split arguments (argv without
/// the program name). Returns the process exit code: 0 on success, 2 on
/// domain/resource errors (one-line message on `err`), other nonzero codes
/// for usage errors. Output bytes are deterministic for fixed inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace liepath
