#ifndef TANGENTLAB_TOOLS_CLI_HPP
#define TANGENTLAB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tangentlab::tools {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitHypothesis = 2,
    kExitNumeric = 3,
    kExitUsage = 64,
};

/// Subcommands: check, sample, view, zoom, fibre, gallery, render, boundary-demo.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace tangentlab::tools

#endif
