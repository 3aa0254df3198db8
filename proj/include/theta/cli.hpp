#pragma once

#include <iosfwd>

namespace theta {

enum ExitCode : int { kExitOk = 0, kExitVerify = 1, kExitUsage = 2, kExitIo = 3 };

/// Entry point of the theta-miner tool. Graphs are read from the named file
/// or from `in` when the path is "-"; results go to `out`, error records to
/// `err` as one JSON object per line.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace theta
