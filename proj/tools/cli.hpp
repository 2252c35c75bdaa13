#pragma once

namespace monodromy::cli {

/// Exit codes: 0 ok, 1 usage, 2 invariant violation, 3 unrealizable, 4 witness failure.
int run(int argc, char** argv);

}  // namespace monodromy::cli
