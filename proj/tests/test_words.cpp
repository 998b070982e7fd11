#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "sq/dimvec.hpp"
#include "sq/perm.hpp"
#include "sq/words.hpp"
#include "test_util.hpp"

using namespace sq;
using testutil::all_permutations;
using testutil::error_kind;

namespace {

// All reduced words of w, via the descent recursion.  Small windows only.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w,
                                                std::map<std::vector<int>, std::vector<std::vector<int>>>& memo) {
    const auto it = memo.find(w.images());
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (w.is_identity()) {
        out.push_back({});
    } else {
        for (int i = 1; i < w.window(); ++i) {
            const Permutation sw = left_multiply_simple(SimpleTransposition(i), w);
            if (length(sw) < length(w)) {
                for (std::vector<int> tail : all_reduced_words(sw, memo)) {
                    tail.insert(tail.begin(), i);
                    out.push_back(std::move(tail));
                }
            }
        }
    }
    memo[w.images()] = out;
    return out;
}

} // namespace

TEST_CASE("word parsing and letter indexing") {
    const ReducedWord word = parse_word(5, "1 2 3 1 2 1 4");
    CHECK(word.size() == 7);
    CHECK(word.letters == std::vector<int>{1, 2, 3, 1, 2, 1, 4});
    CHECK(word.letter_at(1) == 4); // k counts from the right end
    CHECK(word.letter_at(2) == 1);
    CHECK(word.letter_at(7) == 1);
    CHECK(word.to_string() == "1 2 3 1 2 1 4");
    CHECK(error_kind([&] { word.letter_at(0); }) == ErrorKind::IndexOutOfRange);
    CHECK(error_kind([&] { word.letter_at(8); }) == ErrorKind::IndexOutOfRange);

    CHECK(parse_word(4, "").size() == 0);
    CHECK(parse_word(4, "  ").size() == 0);
    CHECK(error_kind([] { parse_word(5, "1 x"); }) == ErrorKind::MalformedInput);
    CHECK(error_kind([] { parse_word(5, "5"); }) == ErrorKind::LetterOutOfRange);
    CHECK(error_kind([] { parse_word(5, "0"); }) == ErrorKind::LetterOutOfRange);
}

TEST_CASE("word evaluation multiplies right to left") {
    CHECK(evaluate_word(parse_word(5, "1 2 3 1 2 1 4")) == from_one_line("43251"));
    CHECK(evaluate_word(parse_word(5, "3 1 2 1 3 2 4")) == from_one_line("43251"));
    CHECK(evaluate_word(parse_word(4, "2 1")) == from_one_line("3124"));
    CHECK(evaluate_word(parse_word(4, "")) == Permutation::identity(4));
    CHECK(evaluate_word(parse_word(3, "1 2 1")) == from_one_line("321"));

    CHECK(is_reduced(parse_word(5, "1 2 3 1 2 1 4")));
    CHECK(is_reduced(parse_word(3, "1 2 1")));
    CHECK(is_reduced(parse_word(3, "2 1 2")));
    CHECK_FALSE(is_reduced(parse_word(3, "1 1")));
    CHECK_FALSE(is_reduced(parse_word(4, "1 2 1 2")));
}

TEST_CASE("commutation and braid moves") {
    CHECK(commutation_move(parse_word(5, "3 1 2"), 1) == parse_word(5, "1 3 2"));
    CHECK(commutation_move(parse_word(5, "1 4 1"), 2) == parse_word(5, "1 1 4"));
    CHECK(error_kind([] { commutation_move(parse_word(5, "1 2 3"), 1); }) ==
          ErrorKind::NotCommuting);
    CHECK(error_kind([] { commutation_move(parse_word(5, "3 1 2"), 0); }) ==
          ErrorKind::IndexOutOfRange);
    CHECK(error_kind([] { commutation_move(parse_word(5, "3 1 2"), 3); }) ==
          ErrorKind::IndexOutOfRange);

    CHECK(braid_move(parse_word(3, "1 2 1"), 1) == parse_word(3, "2 1 2"));
    CHECK(braid_move(parse_word(5, "1 3 2 3 1 2 4"), 2) == parse_word(5, "1 2 3 2 1 2 4"));
    CHECK(braid_move(parse_word(5, "1 2 3 2 1 2 4"), 4) == parse_word(5, "1 2 3 1 2 1 4"));
    CHECK(error_kind([] { braid_move(parse_word(4, "1 3 1"), 1); }) == ErrorKind::NotABraid);
    CHECK(error_kind([] { braid_move(parse_word(4, "1 2 2"), 1); }) == ErrorKind::NotABraid);
    CHECK(error_kind([] { braid_move(parse_word(3, "1 2 1"), 2); }) ==
          ErrorKind::IndexOutOfRange);

    // Both moves preserve evaluation and reducedness across every legal
    // position of every reduced word in window 4.
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
    for (const Permutation& w : all_permutations(4)) {
        for (const std::vector<int>& letters : all_reduced_words(w, memo)) {
            const ReducedWord word{4, letters};
            for (int pos = 1; pos + 1 <= word.size(); ++pos) {
                if (std::abs(word.letters[pos - 1] - word.letters[pos]) >= 2) {
                    const ReducedWord moved = commutation_move(word, pos);
                    CHECK(evaluate_word(moved) == w);
                    CHECK(is_reduced(moved));
                }
            }
            for (int pos = 1; pos + 2 <= word.size(); ++pos) {
                const int a = word.letters[pos - 1], b = word.letters[pos], c = word.letters[pos + 1];
                if (a == c && std::abs(a - b) == 1) {
                    const ReducedWord moved = braid_move(word, pos);
                    CHECK(evaluate_word(moved) == w);
                    CHECK(is_reduced(moved));
                }
            }
        }
    }
}

TEST_CASE("the worked repair transcript reaches a compatible word") {
    const Permutation w = from_one_line("43251");
    ReducedWord word = parse_word(5, "3 1 2 1 3 2 4");
    REQUIRE(evaluate_word(word) == w);
    CHECK_FALSE(is_geometrically_compatible(word, w));

    word = commutation_move(word, 1);
    CHECK(word == parse_word(5, "1 3 2 1 3 2 4"));
    CHECK(evaluate_word(word) == w);

    word = commutation_move(word, 4);
    CHECK(word == parse_word(5, "1 3 2 3 1 2 4"));
    CHECK(evaluate_word(word) == w);

    word = braid_move(word, 2);
    CHECK(word == parse_word(5, "1 2 3 2 1 2 4"));
    CHECK(evaluate_word(word) == w);

    word = braid_move(word, 4);
    CHECK(word == parse_word(5, "1 2 3 1 2 1 4"));
    CHECK(evaluate_word(word) == w);
    CHECK(is_geometrically_compatible(word, w));
}

TEST_CASE("geometric compatibility is the letter/free-value multiset test") {
    const Permutation w = from_one_line("43251");
    CHECK(is_geometrically_compatible(parse_word(5, "1 2 3 1 2 1 4"), w));
    CHECK_FALSE(is_geometrically_compatible(parse_word(5, "3 1 2 1 3 2 4"), w));
    CHECK(is_geometrically_compatible(parse_word(3, ""), Permutation::identity(3)));
    CHECK(is_geometrically_compatible(parse_word(4, "2 1"), from_one_line("3124")));

    CHECK(error_kind([&] { is_geometrically_compatible(parse_word(5, "1"), w); }) ==
          ErrorKind::WordDoesNotEvaluateToW);
    CHECK(error_kind([] {
              is_geometrically_compatible(parse_word(3, "1 1"), Permutation::identity(3));
          }) == ErrorKind::NotReduced);
}

TEST_CASE("deterministic reduced words") {
    CHECK(some_reduced_word(Permutation::identity(4)).size() == 0);
    CHECK(some_reduced_word(from_one_line("21")) == parse_word(2, "1"));
    for (int window : {3, 4}) {
        for (const Permutation& w : all_permutations(window)) {
            const ReducedWord word = some_reduced_word(w);
            CHECK(is_reduced(word));
            CHECK(evaluate_word(word) == w);
            CHECK(word.size() == length(w));
        }
    }
}

TEST_CASE("a compatible word is found for every permutation of windows 4 and 5") {
    CHECK(geometrically_compatible_word(Permutation::identity(4)).size() == 0);
    CHECK(geometrically_compatible_word(from_one_line("3124")) == parse_word(4, "2 1"));

    const ReducedWord big = geometrically_compatible_word(from_one_line("43251"));
    std::multiset<int> letters(big.letters.begin(), big.letters.end());
    CHECK(letters == std::multiset<int>{1, 1, 1, 2, 2, 3, 4});

    for (int window : {4, 5}) {
        for (const Permutation& w : all_permutations(window)) {
            const ReducedWord word = geometrically_compatible_word(w);
            CHECK(is_geometrically_compatible(word, w)); // implies reduced + evaluates to w
        }
    }
}

TEST_CASE("reduced words with pairwise distinct letters are always compatible") {
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
    for (int window = 3; window <= 5; ++window) {
        for (const Permutation& w : all_permutations(window)) {
            for (const std::vector<int>& letters : all_reduced_words(w, memo)) {
                const std::set<int> distinct(letters.begin(), letters.end());
                if (distinct.size() == letters.size())
                    CHECK(is_geometrically_compatible(ReducedWord{window, letters}, w));
            }
        }
    }
}
