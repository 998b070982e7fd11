#pragma once

#include <vector>

#include "sq/perm.hpp"
#include "sq/words.hpp"

namespace sq {

/// Where letter k (counted from the right end of the word) lands on the
/// grid.  The target is always a free vertex of the rank table whose value
/// equals the letter.
struct AssignmentTarget {
    int k;      // 1..N, right-to-left
    int letter; // i_k
    int row;    // row of the (n_k+1)-th free vertex of value i_k, in row order,
                // where n_k = #{j < k : i_j = i_k}; equals i_k + 1 + n_k
                // whenever those free vertices occupy consecutive rows
    int col;    // column of that free vertex
    friend bool operator==(const AssignmentTarget&, const AssignmentTarget&) = default;
};

struct VertexAssignment {
    ReducedWord word;
    std::vector<AssignmentTarget> targets; // k ascending
};

/// The letter-to-vertex dictionary for a geometrically compatible word: the
/// occurrence of letter i with n_k earlier same-letter occurrences maps to
/// the (n_k+1)-th free vertex of value i in increasing-row order — the only
/// bijection the free-vertex geometry allows.  Cross-validated as a
/// bijection onto the free-vertex set.  Throws NotCompatible when the word
/// fails the compatibility check and NoSuchFreeVertex on internal
/// consistency failure (impossible for compatible input).
VertexAssignment bs_vertex_assignment(const ReducedWord& word, const Permutation& w);

/// Which flag positions each step of the tower may move: step k replaces the
/// subspace at position i_k and keeps every other position from step k-1,
/// with step 0 fixed to the standard flag.  origin(k, i) names the last step
/// <= k that chose position i (0 = still the standard flag's F_i).
struct FlagConstraintTable {
    int window = 1;
    std::vector<int> freed; // freed[k-1] = i_k, for k = 1..N

    int steps() const { return static_cast<int>(freed.size()); }
    int origin(int k, int i) const;
};

FlagConstraintTable bs_flag_constraints(const ReducedWord& word);

} // namespace sq
