#pragma once

#include <ostream>

namespace qsign::cli {

/// Runs the qsign command line with the given arguments. Data goes to `out`,
/// diagnostics and progress to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsign::cli
