#pragma once

#include <string>
#include <vector>

namespace spinpulse {

// Exit codes: 0 success, 1 I/O or config errors, 2 bad usage or gate
// descriptor, 3 verification failure.
enum ExitCode : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitUsage = 2,
  kExitVerifyFailed = 3,
};

int dispatch(const std::vector<std::string>& args);
int dispatch(int argc, const char* const* argv);

}  // namespace spinpulse
