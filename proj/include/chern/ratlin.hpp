#ifndef CHERN_RATLIN_HPP
#define CHERN_RATLIN_HPP

#include <optional>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

// Dense exact linear algebra over the rationals. Row reduction picks the
// first nonzero pivot in column order; sizes here are tiny (p(12) = 77).
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Rank of a matrix (rows may be empty).
int rank(RatMatrix m);

/// Solve A x = b exactly. Returns one solution if the system is consistent.
std::optional<RatVector> solve(RatMatrix a, RatVector b);

/// Is v in the row span of rows? (Exact membership.)
bool in_row_span(const RatMatrix& rows, const RatVector& v);

}  // namespace chern

#endif
