#pragma once

#include <string>
#include <vector>

#include "sq/perm.hpp"

namespace sq {

/// A word in the simple transpositions s_1..s_{window-1}, stored left to
/// right as written: letters.front() is s_{i_N} and letters.back() is
/// s_{i_1}, the letter applied first.  Positions are therefore 1-based from
/// the left, while the index k of letter_at(k) counts from the RIGHT end
/// (k = 1 is the last letter) — the convention the assignment map needs.
struct ReducedWord {
    int window = 1;
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
    int letter_at(int k) const; // k = 1..N from the right; IndexOutOfRange
    std::string to_string() const; // space-separated, left to right

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// Parses a space-separated letter list ("1 2 3 1 2 1 4"); empty text gives
/// the empty word.  Throws MalformedInput / LetterOutOfRange.
ReducedWord parse_word(int window, const std::string& text);

/// s_{i_N} ··· s_{i_1} applied to the identity, multiplying on the left
/// letter by letter from the right end.  Throws LetterOutOfRange.
Permutation evaluate_word(const ReducedWord& word);

/// True iff the letter count equals the length of the evaluation.
bool is_reduced(const ReducedWord& word);

/// Swaps letters at positions pos, pos+1 (1-based); legal only when the
/// letters commute (indices differing by >= 2).  Throws NotCommuting /
/// IndexOutOfRange.  Evaluation is preserved.
ReducedWord commutation_move(const ReducedWord& word, int pos);

/// Rewrites the pattern (a, b, a) with |a-b| = 1 at positions pos..pos+2
/// into (b, a, b).  Throws NotABraid / IndexOutOfRange.  Evaluation is
/// preserved.
ReducedWord braid_move(const ReducedWord& word, int pos);

/// A reduced word for w is geometrically compatible when its letter multiset
/// equals the multiset of free-vertex values of the rank table of w.
/// Throws WordDoesNotEvaluateToW / NotReduced when the preconditions fail.
bool is_geometrically_compatible(const ReducedWord& word, const Permutation& w);

/// Deterministic reduced word: repeatedly moves the largest misplaced value
/// to its home position (selection sort by adjacent swaps).
ReducedWord some_reduced_word(const Permutation& w);

/// A geometrically compatible reduced word for w.  Starts from
/// some_reduced_word, pushes excess letters down by commutation-then-braid
/// repair, and falls back to breadth-first search over the rewriting graph
/// (explored in lexicographic order) if the directed repair stalls; total
/// because the reduced words of w form a finite connected graph under the
/// two moves and a compatible word always exists.
ReducedWord geometrically_compatible_word(const Permutation& w);

} // namespace sq
