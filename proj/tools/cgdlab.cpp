#include "cgdlab/cli.hpp"

int main(int argc, char** argv) { return cgdlab::cli::run_main(argc, argv); }
