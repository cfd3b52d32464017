#ifndef SIMULE_CLI_HPP
#define SIMULE_CLI_HPP

namespace simule::cli {

// Exit codes: 0 success, 1 usage, 2 data/IO, 3 estimation failure,
// 4 sweep failure.
int run(int argc, const char* const* argv);

}  // namespace simule::cli

#endif
