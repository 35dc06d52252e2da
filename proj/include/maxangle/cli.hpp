#pragma once

namespace maxangle {

// Command dispatch. Exit 0: success / all verdicts pass. Exit 1: a
// mathematical verdict failed (bound or property violated; a witness file
// is written). Exit 2: input or usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace maxangle
