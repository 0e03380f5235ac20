#pragma once

#include <string>

#include "addchow/mixed_complex.hpp"

namespace addchow {

// Line-based text format for mixed complexes.  Blank lines and `#` comments
// are ignored:
//
//   complex
//   dim 0 1           # degree, dimension (omitted degrees have dimension 0)
//   dim 1 2
//   labels 1 | (u) | (v)      # optional basis labels for one degree
//   b 1               # the matrix of b : V_1 -> V_0, dim(0) rows x dim(1) cols
//   1/2 0
//   B 0               # the matrix of B : V_0 -> V_1, dim(1) rows x dim(0) cols
//   0
//   1
//   end
//
// Matrix rows are space-separated rationals.  Maps that are zero may be (and
// on writing, are) omitted.  A file with no B blocks describes a plain chain
// complex with B = 0.
std::string complex_to_text(const MixedComplex& m);
MixedComplex complex_from_text(const std::string& text);
void write_complex_file(const std::string& path, const MixedComplex& m);
MixedComplex read_complex_file(const std::string& path);

// Homology table of a chain complex over degrees [lo, hi]: one line per degree
// with the chain dimension and the homology dimension.  The structured variant
// emits one machine-readable record per line.
std::string homology_text(const ChainComplex& c, int lo, int hi, bool structured = false);

// Render the periodicity sequence report: a header with the validation
// outcome, then one line per node with its dimension, the ranks of the
// adjacent maps, and the exactness flags.
std::string les_text(const LESReport& r, bool structured = false);

} // namespace addchow
