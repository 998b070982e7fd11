#include "sq/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "sq/dimvec.hpp"
#include "sq/errors.hpp"

namespace sq {

int ReducedWord::letter_at(int k) const {
    if (k < 1 || k > size())
        fail(ErrorKind::IndexOutOfRange, "letter index " + std::to_string(k) + " outside word");
    return letters[static_cast<std::size_t>(size() - k)];
}

std::string ReducedWord::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out << ' ';
        out << letters[i];
    }
    return out.str();
}

ReducedWord parse_word(int window, const std::string& text) {
    ReducedWord word;
    word.window = window;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            fail(ErrorKind::MalformedInput, "bad letter token '" + tok + "'");
        const int letter = std::atoi(tok.c_str());
        if (letter < 1 || letter >= window)
            fail(ErrorKind::LetterOutOfRange,
                 "letter " + std::to_string(letter) + " outside 1.." + std::to_string(window - 1));
        word.letters.push_back(letter);
    }
    return word;
}

Permutation evaluate_word(const ReducedWord& word) {
    for (int letter : word.letters)
        if (letter < 1 || letter >= word.window)
            fail(ErrorKind::LetterOutOfRange,
                 "letter " + std::to_string(letter) + " outside 1.." + std::to_string(word.window - 1));
    Permutation u = Permutation::identity(word.window);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        u = left_multiply_simple(SimpleTransposition(*it), u);
    return u;
}

bool is_reduced(const ReducedWord& word) {
    return length(evaluate_word(word)) == word.size();
}

ReducedWord commutation_move(const ReducedWord& word, int pos) {
    if (pos < 1 || pos >= word.size())
        fail(ErrorKind::IndexOutOfRange, "commutation position " + std::to_string(pos) + " outside word");
    const int a = word.letters[static_cast<std::size_t>(pos - 1)];
    const int b = word.letters[static_cast<std::size_t>(pos)];
    if (std::abs(a - b) < 2)
        fail(ErrorKind::NotCommuting,
             "s_" + std::to_string(a) + " and s_" + std::to_string(b) + " do not commute");
    ReducedWord out = word;
    std::swap(out.letters[static_cast<std::size_t>(pos - 1)], out.letters[static_cast<std::size_t>(pos)]);
    return out;
}

ReducedWord braid_move(const ReducedWord& word, int pos) {
    if (pos < 1 || pos + 2 > word.size())
        fail(ErrorKind::IndexOutOfRange, "braid position " + std::to_string(pos) + " outside word");
    const int a = word.letters[static_cast<std::size_t>(pos - 1)];
    const int b = word.letters[static_cast<std::size_t>(pos)];
    const int c = word.letters[static_cast<std::size_t>(pos + 1)];
    if (a != c || std::abs(a - b) != 1)
        fail(ErrorKind::NotABraid, "letters at position " + std::to_string(pos) + " are not (a, b, a) with adjacent indices");
    ReducedWord out = word;
    out.letters[static_cast<std::size_t>(pos - 1)] = b;
    out.letters[static_cast<std::size_t>(pos)] = a;
    out.letters[static_cast<std::size_t>(pos + 1)] = b;
    return out;
}

namespace {

// Letter multiset as counts indexed by letter value.
std::map<int, int> letter_counts(const std::vector<int>& letters) {
    std::map<int, int> counts;
    for (int v : letters) ++counts[v];
    return counts;
}

std::map<int, int> free_value_counts(const Permutation& w) {
    std::map<int, int> counts;
    for (const FreeVertex& fv : free_vertices(rank_vector(w))) ++counts[fv.value];
    return counts;
}

} // namespace

bool is_geometrically_compatible(const ReducedWord& word, const Permutation& w) {
    if (word.window != w.window())
        fail(ErrorKind::WindowMismatch, "word and permutation windows disagree");
    const Permutation value = evaluate_word(word);
    if (!(value == w))
        fail(ErrorKind::WordDoesNotEvaluateToW,
             "word evaluates to " + value.to_string() + ", not " + w.to_string());
    if (length(w) != word.size())
        fail(ErrorKind::NotReduced, "word has " + std::to_string(word.size()) + " letters but length(w) = " + std::to_string(length(w)));
    return letter_counts(word.letters) == free_value_counts(w);
}

ReducedWord some_reduced_word(const Permutation& w) {
    // Selection sort by adjacent swaps: repeatedly take the largest value not
    // at its home position and walk it right.  Each right multiplication
    // u -> u * s_j swaps positions j, j+1 and removes one inversion, so the
    // recorded letters j_1 .. j_m satisfy id = w * s_{j_1} ... * s_{j_m},
    // i.e. w = s_{j_m} *** s_{j_1}: the stored (left-to-right) word is the
    // record reversed.
    std::vector<int> u = w.images();
    const int window = w.window();
    std::vector<int> record;
    for (int v = window; v >= 2; --v) {
        int p = 0;
        for (int k = 1; k <= window; ++k)
            if (u[k - 1] == v) { p = k; break; }
        for (int j = p; j < v; ++j) {
            record.push_back(j);
            std::swap(u[j - 1], u[j]);
        }
    }
    ReducedWord word;
    word.window = window;
    word.letters.assign(record.rbegin(), record.rend());
    return word;
}

namespace {

// One round of the directed repair: find the leftmost letter occurring more
// often than the target multiset allows, and try to braid one of its
// occurrences down to letter-1.  Two consecutive occurrences of v can be
// squeezed together when the letters strictly between them contain exactly
// one v-1 and otherwise commute with v; then (v, v-1, v) -> (v-1, v, v-1).
// Every braid lowers the letter sum, so repeated rounds terminate.
bool directed_repair_round(ReducedWord& word, const std::map<int, int>& target) {
    const std::map<int, int> have = letter_counts(word.letters);
    for (std::size_t start = 0; start < word.letters.size(); ++start) {
        const int v = word.letters[start];
        auto it = target.find(v);
        const int allowed = it == target.end() ? 0 : it->second;
        if (have.at(v) <= allowed) continue;

        // Next occurrence of v to the right.
        std::size_t partner = start + 1;
        while (partner < word.letters.size() && word.letters[partner] != v) ++partner;
        if (partner >= word.letters.size()) continue;

        std::size_t mid = 0;
        bool usable = true;
        int seen_below = 0;
        for (std::size_t t = start + 1; t < partner && usable; ++t) {
            const int x = word.letters[t];
            if (x == v - 1) {
                mid = t;
                ++seen_below;
            } else if (std::abs(x - v) < 2) {
                usable = false; // a v+1 in between blocks the squeeze
            }
        }
        if (!usable || seen_below != 1) continue;

        // Commute the left v rightward until it sits just before the v-1,
        // then the right v leftward until just after it; braid the triple.
        ReducedWord cur = word;
        for (std::size_t t = start; t + 1 < mid; ++t)
            cur = commutation_move(cur, static_cast<int>(t) + 1);
        for (std::size_t t = partner; t > mid + 1; --t)
            cur = commutation_move(cur, static_cast<int>(t));
        word = braid_move(cur, static_cast<int>(mid));
        return true;
    }
    return false;
}

} // namespace

ReducedWord geometrically_compatible_word(const Permutation& w) {
    const std::map<int, int> target = free_value_counts(w);
    ReducedWord word = some_reduced_word(w);
    while (letter_counts(word.letters) != target) {
        if (!directed_repair_round(word, target)) break;
    }
    if (letter_counts(word.letters) == target) return word;

    // BFS over the commutation/braid graph, layer by layer in lexicographic
    // order.  Terminates: the reduced words of w are finite, connected under
    // the two moves, and a compatible one exists.
    std::set<std::vector<int>> visited{word.letters};
    std::set<std::vector<int>> frontier{word.letters};
    while (!frontier.empty()) {
        std::set<std::vector<int>> next;
        for (const std::vector<int>& letters : frontier) {
            if (letter_counts(letters) == target) {
                ReducedWord out;
                out.window = w.window();
                out.letters = letters;
                return out;
            }
            ReducedWord cur;
            cur.window = w.window();
            cur.letters = letters;
            for (int pos = 1; pos < cur.size(); ++pos) {
                if (std::abs(letters[static_cast<std::size_t>(pos - 1)] - letters[static_cast<std::size_t>(pos)]) >= 2) {
                    std::vector<int> nb = commutation_move(cur, pos).letters;
                    if (visited.insert(nb).second) next.insert(std::move(nb));
                }
                if (pos + 2 <= cur.size()) {
                    const int a = letters[static_cast<std::size_t>(pos - 1)];
                    const int b = letters[static_cast<std::size_t>(pos)];
                    if (a == letters[static_cast<std::size_t>(pos + 1)] && std::abs(a - b) == 1) {
                        std::vector<int> nb = braid_move(cur, pos).letters;
                        if (visited.insert(nb).second) next.insert(std::move(nb));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    // Unreachable: a geometrically compatible word always exists.
    fail(ErrorKind::NotCompatible, "no compatible word found for " + w.to_string());
}

} // namespace sq
