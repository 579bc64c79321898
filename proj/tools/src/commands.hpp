#pragma once

#include <iosfwd>

namespace mchroma::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kIo = 3 };

/// Entry point of the mchroma tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mchroma::cli
