#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

// 0 verified/pass, 1 verification failure, 2 input or usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int exit_code_for(const Error& e);

// The whole command-line surface; argv without the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace hyperspec
