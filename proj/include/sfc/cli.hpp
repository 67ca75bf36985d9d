#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,        // bad scenario, unreadable file, invariant failure
  kExitUsage = 2,          // unknown subcommand or flag
  kExitVerifyFailed = 3,   // oracle disagreed with the closed form
};

/// Entry point behind the `sfc` binary. args[0] is the program name.
///
///   simulate  per-slot trace CSV of the proposed controller
///   compare   proposed vs fit / modified / grid-tie summary CSV
///   sweep     savings against grid-tie over panel counts and scenarios
///   verify    closed-form vs brute-force report
///
/// With --out the CSV goes to that file and a `<out>.meta` sidecar records
/// the resolved configuration and generator; otherwise it goes to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sfc
