#pragma once

#include <iosfwd>

namespace equicoh {

// Runs the complete verification suite: every golden value and every
// property check, one pass/FAIL line per criterion (with indented notes).
// Returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace equicoh
