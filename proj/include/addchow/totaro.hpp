#pragma once

#include "addchow/cycles.hpp"

namespace addchow {

// The parametrized curve (1/a; t, (b1*t - b1*b2)/(t - b1*b2)) with optional extra
// constant slots appended; the zero cycle when a vanishes. Its full boundary is
// (1/a; b1) + (1/a; b2) - (1/a; b1*b2).
FormalCycle totaro_c2(const RatFunc& a, const RatFunc& b1, const RatFunc& b2,
                      const std::vector<ProjValue>& extra = {}, int modulus = 2);

} // namespace addchow
