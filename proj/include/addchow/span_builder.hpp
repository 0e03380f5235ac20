#pragma once

#include <vector>

#include "addchow/cycles.hpp"
#include "addchow/mixed_complex.hpp"

namespace addchow {

struct SpanOptions {
    int n_cap = 6;
    // the reduced-subcomplex construction expects reduced seeds; relax only
    // for experiments that consult validate() on the result afterwards
    bool require_reduced = true;
};

// Closure of the seed cycles under the reduced boundary (degree -1) and the
// reciprocal-insertion sum (degree +1), as a mixed complex: V_n is spanned by
// the distinct canonical terms seen with n slots, b is the reduced boundary,
// and B restricted to degree n is (-1)^n times the insertion sum, the unique
// degree-local sign turning the commuting pair into an anticommuting one.
// Errors: seeds above the cap or a nonzero insertion image that would need a
// degree above the cap (the closure must fit); non-reduced seeds when required.
MixedComplex span_builder(const std::vector<FormalCycle>& seeds, const SpanOptions& opt);
MixedComplex span_builder(const std::vector<FormalCycle>& seeds, int n_cap);

}  // namespace addchow
