#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stslab::cli {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;

// args excludes the program name. Results go to --out when given, otherwise to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace stslab::cli
