#pragma once

#include <ostream>

#include "tra/cli/config.hpp"

namespace tra::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitBadParameters = 2,
    kExitNumericalFailure = 3,
};

// Each command writes its CSV (or report) to `out` and returns an exit code.
// Domain and numerical errors propagate as exceptions; run() maps them.
int cmd_pps(const RunConfig& config, std::ostream& out);
int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_wavefunction(const RunConfig& config, std::ostream& out);
int cmd_figure(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Whole command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tra::cli
