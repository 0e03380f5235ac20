#pragma once

#include "addchow/mixed_complex.hpp"

namespace addchow {

// Deterministic pseudo-random valid mixed complex: a direct sum of elementary
// pieces (free generator, b-pair, B-pair, and a four-dimensional interacting
// piece) conjugated by random invertible integer matrices degreewise, so the
// axioms hold by construction while the matrices look generic.
MixedComplex random_mixed_complex(unsigned long long seed, int max_total_dim = 40);

// invertible rational matrix built from random integer elementary operations
QMatrix random_invertible(unsigned long long seed, int n);

}  // namespace addchow
