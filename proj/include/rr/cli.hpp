#ifndef RR_CLI_HPP
#define RR_CLI_HPP

#include <ostream>

namespace rr {

enum class Status { Ok = 0, CheckFailed = 1, InputError = 2 };

// Runs one rrtool subcommand; JSON goes to out, diagnostics to err. The
// return value is the process exit code.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rr

#endif
