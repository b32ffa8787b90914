#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpa {

/// Runs the command-line interface. @p args includes the program name.
/// Returns the process exit status.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mpa
