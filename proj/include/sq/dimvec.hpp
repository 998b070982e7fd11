#pragma once

#include <utility>
#include <vector>

#include "sq/gridquiver.hpp"
#include "sq/perm.hpp"

namespace sq {

/// A grid vertex whose rank-table entry is a strict local maximum:
/// r[row][col] < row, r[row][col] > r[row-1][col] and > r[row][col-1]
/// (out-of-grid neighbours count as zero).  `value` is the entry itself.
struct FreeVertex {
    int row, col, value;
    friend auto operator<=>(const FreeVertex&, const FreeVertex&) = default;
};

/// Sandwich conditions F_{lower[q-1]} <= V_q <= F_{upper[q-1]} read off a
/// rank table, one pair per flag step q = 1..window-1.  lower = 0 means no
/// lower bound, upper = window means no upper bound.
struct InclusionConditions {
    int window = 0;
    std::vector<int> lower;
    std::vector<int> upper;
    friend bool operator==(const InclusionConditions&, const InclusionConditions&) = default;
};

/// The rank table of w on the grid: entry (p, q) counts k <= q with
/// w(k) <= p, for p = 1..window and q = 1..window-1.  Requires window >= 3
/// (the grid needs n >= 2); throws WindowTooSmall otherwise.
DimensionVector rank_vector(const Permutation& w);

/// Rank table of s_i * w from the rank table of w, without recounting: the
/// entries that change are exactly row i, columns w^{-1}(i) <= q < w^{-1}(i+1),
/// each dropping by one.  Requires the product to go up in length; throws
/// LengthDecrease when w^{-1}(i) > w^{-1}(i+1).
DimensionVector apply_simple_update(const DimensionVector& rv, const Permutation& w, int i);

/// All free vertices of a rank table, sorted by (row, col).
std::vector<FreeVertex> free_vertices(const DimensionVector& rv);

/// The successor-closure of the rank table, defined only for smooth w
/// (throws NotSmooth): entries where the rank table is 0 or min(i, j) are
/// kept, all others become the max of the upper/left neighbours, filled in
/// row-major order.
DimensionVector smooth_vector(const Permutation& w);

/// Reads the sandwich bounds off the rank table of w with no smoothness
/// check: upper[q-1] = min{ i : r[i][q] = q } (window if none), lower[q-1] =
/// max{ i : r[i][q] = i } (0 if none).
InclusionConditions inclusion_bounds(const Permutation& w);

/// inclusion_bounds restricted to smooth w; throws NotSmooth otherwise.
/// For smooth w the bounds are exactly the defining conditions of X_w.
InclusionConditions extract_inclusions(const Permutation& w);

/// Pairs q < q' whose sandwich bounds cross: upper[q-1] > lower[q'-1] fails,
/// i.e. the column-q upper bound sits strictly above the column-q' lower
/// bound, with both bounds nontrivial.  Smooth permutations have none.
std::vector<std::pair<int, int>> crossing_pairs(const InclusionConditions& inc);

} // namespace sq
