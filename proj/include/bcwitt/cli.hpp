#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcw {

/// Runs one command line (without the program name). Results go to `out` as a
/// single line of JSON. Exit codes: 0 success, 1 domain error (reported as
/// {"error":{"kind":…,"detail":…}} on `out`), 2 usage error (message on
/// `err`), 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcw
