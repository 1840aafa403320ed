#ifndef METAP_CLI_HPP
#define METAP_CLI_HPP

namespace metap {

// Full command-line surface. Returns the process exit code:
// 0 success, 2 validation error, 3 numeric non-convergence or failed
// verification, 4 I/O error.
int run_cli(int argc, const char* const* argv);

}  // namespace metap

#endif
