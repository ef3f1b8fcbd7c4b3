#pragma once

namespace cgdlab::cli {

// Full command-line entry point (subcommands: run, experiment, plot,
// validate). Returns the process exit code.
int run_main(int argc, char** argv);

}  // namespace cgdlab::cli
