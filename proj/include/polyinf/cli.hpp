#pragma once

#include <ostream>

namespace polyinf {

enum ExitCode { kExitOk = 0, kExitOther = 1, kExitParse = 2, kExitUnsupported = 3, kExitLicq = 4, kExitTruncation = 5 };

/// Entry point of the polyinf command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyinf
