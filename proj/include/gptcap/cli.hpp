#ifndef GPTCAP_CLI_HPP
#define GPTCAP_CLI_HPP

#include <string>
#include <vector>

namespace gptcap::cli {

// Runs one subcommand. Exit status: 0 success, 1 a checked property failed
// (e.g. a DPI violation), 2 usage or input errors. Exposed as a library call
// so the acceptance suite can drive the exact CLI paths in-process.
int dispatch(const std::vector<std::string>& args);

} // namespace gptcap::cli

#endif
