#pragma once

#include <string>

#include "addchow/cycles.hpp"

namespace addchow {

// Line-based text format for formal cycles.  Blank lines and `#` comments are
// ignored.  A file holds exactly one cycle:
//
//   cycle
//   ring 2            # truncation exponents, one per affine coordinate
//   slots 3           # number of box coordinates
//   symbols b1 b2     # free symbols allowed in expressions (omitted when none)
//   param s           # curve parameter name (omitted when the default `s` is used)
//   term 1 | 1/2 | s ; (b1*s - b1*b2)/(s - b1*b2) ; 3
//   term -2 | b1 | 2 ; inf ; 4/5
//   end
//
// A term line is `term <coeff> | <affine coords> | <box coords>` with commas
// between affine coordinates and semicolons between box coordinates; the box
// field is empty when `slots` is 0.  `inf` denotes the point at infinity.  A
// term is a parametrized curve exactly when some box coordinate mentions the
// declared parameter, and constant slots of curves are written like point
// coordinates.  A trailing `| decomposable` field marks terms known to be
// products across the two affine coordinates.  Symbol names are identifiers
// not starting with an underscore (underscored names are reserved for
// internally generated curve parameters).

// Render the cycle in the format above; `param` names the curve parameter and
// must not collide with a symbol appearing in the cycle.
std::string cycle_to_text(const FormalCycle& z, const std::string& param = "s");

// Parse a cycle from the format above.  Term lines are validated exactly as
// direct construction would: degenerate terms are dropped and terms touching a
// face are rejected, with the offending line quoted in the error.
FormalCycle cycle_from_text(const std::string& text);

void write_cycle_file(const std::string& path, const FormalCycle& z,
                      const std::string& param = "s");
FormalCycle read_cycle_file(const std::string& path);

} // namespace addchow
