#pragma once

namespace latticekit::cli {

/// Entry point of the `latticekit` command. Returns the process exit code:
/// 0 success, 2 validation, 3 capacity, 4 numerical, 1 anything else.
int run(int argc, char** argv);

}  // namespace latticekit::cli
