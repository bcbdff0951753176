#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxart::cli {

// Runs the coxart command line. args excludes the program name.
// Exit codes: 0 success, 1 verification failure, 2 input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace coxart::cli
