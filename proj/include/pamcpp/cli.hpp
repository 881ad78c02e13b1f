#pragma once

namespace pamcpp {

// Entry point behind the pamcpp binary. Exit codes: 0 success, 2 bad flags,
// 3 placement failure, 4 invalid instance/plan, 5 internal invariant breach.
int run_cli(int argc, const char* const* argv);

}  // namespace pamcpp
