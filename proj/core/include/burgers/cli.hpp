#pragma once

namespace burgers {

// Full command-line driver (simulate / exact / extrapolate / predict /
// discrepancy / reproduce).  Returns the process exit code:
//   0  success
//   1  a result check failed (high-precision re-check, reproduction target)
//   2  usage, configuration, or input-file problem
//   3  the time stepper produced a non-finite state
//   4  an exact mode outgrew the term cap
//   5  a transform pipeline rejected its input
int run_cli(int argc, char** argv);

}  // namespace burgers
