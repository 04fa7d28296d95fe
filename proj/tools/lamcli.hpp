#pragma once

#include <ostream>

namespace lamcli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDomain = 2;
inline constexpr int kVerification = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lamcli
