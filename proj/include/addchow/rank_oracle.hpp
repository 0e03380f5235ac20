#pragma once

#include "addchow/qmatrix.hpp"

namespace addchow {

// Independent rank computation by Bareiss fraction-free elimination over the
// integers (rows cleared of denominators first). Shares no code path with
// QMatrix::reduced_echelon, so the two can cross-check each other.
int bareiss_rank(const QMatrix& m);

// dim ker(out) - rank(in) computed entirely through the Bareiss path:
// rank-nullity gives dim ker(out) = dim - bareiss_rank(out)
int oracle_homology_dim(int dim, const QMatrix& outgoing, const QMatrix& incoming);

}  // namespace addchow
