#include "sq/bsmap.hpp"

#include <algorithm>
#include <string>

#include "sq/dimvec.hpp"
#include "sq/errors.hpp"

namespace sq {

VertexAssignment bs_vertex_assignment(const ReducedWord& word, const Permutation& w) {
    if (!is_geometrically_compatible(word, w))
        fail(ErrorKind::NotCompatible,
             "word '" + word.to_string() + "' is not geometrically compatible with " + w.to_string());
    const std::vector<FreeVertex> free = free_vertices(rank_vector(w));

    VertexAssignment out;
    out.word = word;
    // Two uniqueness facts pin the assignment down: free vertices sharing a
    // value sit in pairwise distinct rows, and within a row values strictly
    // increase.  So for each letter value the row-sorted list of free
    // vertices with that value is strict, and the only possible bijection
    // sends the occurrence with n_k earlier same-letter occurrences to the
    // (n_k+1)-th entry of that list.  When those rows are consecutive
    // starting at letter+1 — as in every small case — this reproduces the
    // row formula letter + 1 + n_k.
    std::vector<int> seen(static_cast<std::size_t>(w.window()), 0); // per letter value
    for (int k = 1; k <= word.size(); ++k) {
        const int letter = word.letter_at(k);
        const int wanted = seen[static_cast<std::size_t>(letter)]; // earlier occurrences
        ++seen[static_cast<std::size_t>(letter)];
        const FreeVertex* hit = nullptr;
        int skipped = 0;
        for (const FreeVertex& fv : free) { // row-major, hence row-sorted per value
            if (fv.value != letter) continue;
            if (skipped == wanted) { hit = &fv; break; }
            ++skipped;
        }
        if (!hit)
            fail(ErrorKind::NoSuchFreeVertex,
                 "fewer than " + std::to_string(wanted + 1) + " free vertices of value " +
                     std::to_string(letter));
        out.targets.push_back({k, letter, hit->row, hit->col});
    }

    // Cross-validate: the targets must exhaust the free-vertex set.
    std::vector<FreeVertex> hit_set;
    for (const AssignmentTarget& t : out.targets) hit_set.push_back({t.row, t.col, t.letter});
    std::sort(hit_set.begin(), hit_set.end());
    if (hit_set != free)
        fail(ErrorKind::NoSuchFreeVertex, "assignment is not a bijection onto the free vertices");
    return out;
}

int FlagConstraintTable::origin(int k, int i) const {
    if (k < 0 || k > steps())
        fail(ErrorKind::IndexOutOfRange, "step " + std::to_string(k) + " outside table");
    if (i < 1 || i >= window)
        fail(ErrorKind::IndexOutOfRange, "flag position " + std::to_string(i) + " outside window");
    for (int t = k; t >= 1; --t)
        if (freed[static_cast<std::size_t>(t - 1)] == i) return t;
    return 0;
}

FlagConstraintTable bs_flag_constraints(const ReducedWord& word) {
    FlagConstraintTable table;
    table.window = word.window;
    table.freed.reserve(word.letters.size());
    for (int k = 1; k <= word.size(); ++k) {
        const int letter = word.letter_at(k);
        if (letter < 1 || letter >= word.window)
            fail(ErrorKind::LetterOutOfRange, "letter " + std::to_string(letter) + " outside window");
        table.freed.push_back(letter);
    }
    return table;
}

} // namespace sq
