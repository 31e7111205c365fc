#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace muspectra {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a claim or check does not hold
inline constexpr int kExitInput = 2;   // unreadable input, bad flags, illegal t

/// Runs the mu_spectra command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace muspectra
