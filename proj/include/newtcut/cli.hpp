#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace newtcut {

/// Runs a subcommand; exit code 0 on success, 1 on refusal or failed
/// certificate, 2 on input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtcut
