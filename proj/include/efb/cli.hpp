#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace efb {

// Exit codes
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMalformed = 2;

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace efb
