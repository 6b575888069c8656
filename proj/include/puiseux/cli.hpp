#ifndef PUISEUX_CLI_HPP
#define PUISEUX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace puiseux::cli {

// Exit codes: 0 success (NotDivisible-style outcomes are results), 1 domain /
// guardrail errors, 2 parse errors and unknown commands.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace puiseux::cli

#endif
