#ifndef STARPRISM_CLI_HPP
#define STARPRISM_CLI_HPP

#include <string>
#include <vector>

namespace starprism::cli {

// Runs one CLI invocation; `args` excludes the program name.
// Exit codes: 0 success, 1 verification found violations, 2 usage or
// ill-formed input, 3 exact solve ended on budget.
int run(const std::vector<std::string>& args);

} // namespace starprism::cli

#endif // STARPRISM_CLI_HPP
