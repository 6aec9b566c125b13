#pragma once

#include <ostream>

namespace lgp::cli {

// Runs one subcommand. Returns 0 on success, 1 on a domain error, 2 on a
// usage error. Output is deterministic: identical invocations produce
// byte-identical bytes on `out`.
int dispatch(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace lgp::cli
