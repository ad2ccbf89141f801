#pragma once

#include <ostream>

namespace wittnum {

// Fixture checks against independently known values (classical surfaces and
// threefolds, hypersurface tables, the iterated-Frobenius family). Prints one
// line per check; returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace wittnum
