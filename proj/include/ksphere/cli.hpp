#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ksphere {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when a verification check fails or an internal error occurs,
/// 2 for invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ksphere
