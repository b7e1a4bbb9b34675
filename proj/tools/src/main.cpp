#include "latticekit/cli.hpp"

int main(int argc, char** argv) { return latticekit::cli::run(argc, argv); }
