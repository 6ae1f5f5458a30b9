#pragma once

#include <ostream>

namespace graphweight::tools {

/// Golden values for small graphs plus a dyadic-arithmetic oracle.
/// Writes one line per check to `out`; returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace graphweight::tools
