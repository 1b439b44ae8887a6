#ifndef PAIRDOM_CLI_HPP
#define PAIRDOM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pairdom {

// Exit codes: 0 pass, 1 property violated / equivalence false,
// 2 input error, 3 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

// The whole command-line surface, callable in-process for tests.
// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pairdom

#endif
