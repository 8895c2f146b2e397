#ifndef OGC_CLI_HPP
#define OGC_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace ogc {

/// Runs one CLI invocation (without the program name). Reports are written
/// as "key: value" lines to `out`; failures print an error line to `err`.
/// Returns the process exit code: 0 exactly when the requested action or
/// predicate succeeded.
int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace ogc

#endif
