#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sq/budget.hpp"
#include "sq/gridquiver.hpp"
#include "sq/linalg.hpp"
#include "sq/perm.hpp"
#include "sq/words.hpp"

namespace sq {

/// A subspace of F_q^ambient held as a reduced-row-echelon basis: rows
/// nonzero, pivots strictly increasing, each pivot 1 with zeros elsewhere in
/// its column.  The form is canonical, so equal spans have equal bases and
/// operator== decides span equality.
class Subspace {
public:
    static Subspace zero(int q, int ambient);
    static Subspace full(int q, int ambient);
    /// span(e_1, ..., e_k) — the standard flag member F_k.
    static Subspace coordinate(int q, int ambient, int k);
    /// Canonicalizes an arbitrary spanning set (entries reduced mod q).
    static Subspace span(int q, int ambient, const std::vector<std::vector<int>>& vectors);

    int q() const { return q_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    int intersection_dim(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    /// Lexicographic on (dim, flattened basis) — the enumeration order.
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    Subspace(int q, int ambient) : q_(q), ambient_(ambient) {}
    int q_ = 2;
    int ambient_ = 0;
    std::vector<std::vector<int>> basis_;
};

/// A point of the full flag variety over F_q: chain V_1 < ... < V_n inside
/// F_q^window with dim V_j = j.
struct FlagPoint {
    int q = 2;
    int window = 0;
    std::vector<Subspace> chain;
};

/// All subspaces S with lower <= S <= upper and dim S = dim, each once, in
/// canonical-form lexicographic order.  Throws BadSandwich when lower is not
/// contained in upper or dim is outside [dim lower, dim upper], and
/// BudgetExceeded for field orders outside {2,3,5}.
std::vector<Subspace> enumerate_subspaces(int q, int ambient, int dim, const Subspace& lower,
                                          const Subspace& upper);

/// Visits every flag in F_q^window (no conditions).  Used as an independent
/// cardinality oracle in tests; the Schubert counter shares its recursion
/// but prunes by rank conditions.
void for_each_flag(int q, int window, const std::function<void(const FlagPoint&)>& visit,
                   const Budget* budget = nullptr);

/// Number of subrepresentation tuples (N_{i,j}) of the canonical
/// representation over F_q with dim N_{i,j} = e_{i,j}: each N_{i,j} lives in
/// the coordinate subspace F_i of F_q^{n+1} and must contain N_{i-1,j} and
/// N_{i,j-1} (the images under the identity/inclusion arrow maps).
/// Enumeration is column-major with sandwich pruning.  Budget: n <= 4,
/// q in {2,3,5}; throws BudgetExceeded beyond, ShapeMismatch for bad e.
std::uint64_t count_subrepresentations(int n, int q, const DimensionVector& e,
                                       const Budget* budget = nullptr);

/// Number of flags satisfying every rank condition
/// dim(F_p cap V_j) >= #{k <= j : w(k) <= p} of the Schubert variety X_w,
/// with F the standard coordinate flag.  Budget: window <= 5, q in {2,3}.
std::uint64_t count_schubert_points(const Permutation& w, int q, const Budget* budget = nullptr);

/// Number of points of the Bott-Samelson tower of the word: tuples of flags
/// (V^1, ..., V^N) where V^k differs from V^{k-1} only at position i_k and
/// V^0 is the standard flag.  Equals (q+1)^N; computed by stepwise
/// enumeration, not by the formula.  Throws NotReduced for non-reduced
/// words; budget: window <= 5, q in {2,3}.
std::uint64_t count_bott_samelson_points(const ReducedWord& word, int q,
                                         const Budget* budget = nullptr);

/// Sum of q^length(u) over all u <= w in Bruhat order — the cell count of
/// X_w over F_q, the second independent oracle.  Budget: window <= 6.
std::uint64_t bruhat_interval_point_count(const Permutation& w, int q);

} // namespace sq
