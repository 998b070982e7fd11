#include "doctest.h"

#include <cstdint>
#include <set>
#include <vector>

#include "sq/dimvec.hpp"
#include "sq/fforacle.hpp"
#include "sq/perm.hpp"
#include "sq/words.hpp"
#include "test_util.hpp"

using namespace sq;
using testutil::all_permutations;
using testutil::error_kind;

namespace {

std::uint64_t power(std::uint64_t base, int exp) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

} // namespace

TEST_CASE("subspaces are canonical under span changes") {
    const Subspace z = Subspace::zero(2, 4);
    const Subspace f = Subspace::full(2, 4);
    CHECK(z.dim() == 0);
    CHECK(f.dim() == 4);
    CHECK(f.contains(z));
    CHECK_FALSE(z.contains(f));
    CHECK(Subspace::coordinate(2, 4, 2).dim() == 2);
    CHECK(Subspace::coordinate(2, 4, 0) == z);
    CHECK(Subspace::coordinate(2, 4, 4) == f);

    // Scaling and row operations do not change the canonical form.
    CHECK(Subspace::span(3, 3, {{2, 2, 0}}) == Subspace::span(3, 3, {{1, 1, 0}}));
    CHECK(Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}}) ==
          Subspace::span(2, 3, {{1, 0, 1}, {0, 1, 1}}));
    CHECK(Subspace::span(5, 2, {{3, 4}}) == Subspace::span(5, 2, {{1, 3}})); // 3^{-1} * 4 = 2 * 4 = 3

    const Subspace e1 = Subspace::span(2, 4, {{1, 0, 0, 0}});
    const Subspace e2 = Subspace::span(2, 4, {{0, 1, 0, 0}});
    CHECK(e1.sum(e2) == Subspace::coordinate(2, 4, 2));
    CHECK(e1.intersection_dim(e2) == 0);
    CHECK(Subspace::coordinate(2, 4, 2).intersection_dim(
              Subspace::span(2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}})) == 1);

    // Membership decides span equality under adjoining one vector, for a
    // deterministic sweep of spanning sets.
    for (int q : {2, 3, 5}) {
        for (int seed = 1; seed < 40; ++seed) {
            std::vector<int> v1(4), v2(4), v3(4);
            int s = seed * 2654435761u % 9973;
            for (int c = 0; c < 4; ++c) { v1[c] = s % q; s /= q; }
            s = seed * 40503u % 9973 + 17;
            for (int c = 0; c < 4; ++c) { v2[c] = s % q; s /= q; }
            s = seed * 69069u % 9973 + 5;
            for (int c = 0; c < 4; ++c) { v3[c] = s % q; s /= q; }
            const Subspace base = Subspace::span(q, 4, {v1, v2});
            const Subspace ext = Subspace::span(q, 4, {v1, v2, v3});
            CHECK(base.contains(Subspace::span(q, 4, {v3})) == (ext.dim() == base.dim()));
            CHECK(ext.contains(base));
        }
    }
}

TEST_CASE("sandwich enumeration hits Gaussian-binomial cardinalities") {
    const Subspace z2 = Subspace::zero(2, 4);
    const Subspace f2 = Subspace::full(2, 4);
    CHECK(enumerate_subspaces(2, 2, 1, Subspace::zero(2, 2), Subspace::full(2, 2)).size() == 3);
    CHECK(enumerate_subspaces(2, 3, 1, Subspace::zero(2, 3), Subspace::full(2, 3)).size() == 7);
    CHECK(enumerate_subspaces(2, 3, 2, Subspace::zero(2, 3), Subspace::full(2, 3)).size() == 7);
    CHECK(enumerate_subspaces(2, 4, 2, z2, f2).size() == 35);
    CHECK(enumerate_subspaces(3, 4, 2, Subspace::zero(3, 4), Subspace::full(3, 4)).size() == 130);
    CHECK(enumerate_subspaces(2, 5, 2, Subspace::zero(2, 5), Subspace::full(2, 5)).size() == 155);

    // Between F_1 and F_3 the dimension-2 spaces biject with lines in a
    // 2-dimensional quotient: q + 1 of them.
    for (int q : {2, 3, 5}) {
        const auto mid = enumerate_subspaces(q, 4, 2, Subspace::coordinate(q, 4, 1),
                                             Subspace::coordinate(q, 4, 3));
        CHECK(static_cast<int>(mid.size()) == q + 1);
        for (const Subspace& s : mid) {
            CHECK(s.contains(Subspace::coordinate(q, 4, 1)));
            CHECK(Subspace::coordinate(q, 4, 3).contains(s));
        }
    }

    // Degenerate sandwich: only the lower bound itself.
    const Subspace line = Subspace::span(2, 4, {{1, 1, 0, 0}});
    const auto only = enumerate_subspaces(2, 4, 1, line, f2);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == line);

    // Enumeration is duplicate-free.
    const auto all2 = enumerate_subspaces(2, 4, 2, z2, f2);
    CHECK(std::set<Subspace>(all2.begin(), all2.end()).size() == all2.size());

    CHECK(error_kind([&] { enumerate_subspaces(2, 4, 3, line, Subspace::coordinate(2, 4, 2)); }) ==
          ErrorKind::BadSandwich);
    CHECK(error_kind([&] {
              enumerate_subspaces(2, 4, 1, Subspace::span(2, 4, {{0, 0, 0, 1}}),
                                  Subspace::coordinate(2, 4, 2));
          }) == ErrorKind::BadSandwich);
    CHECK(error_kind([&] { enumerate_subspaces(7, 3, 1, Subspace::zero(7, 3), Subspace::full(7, 3)); }) ==
          ErrorKind::BudgetExceeded);
}

TEST_CASE("flag enumeration counts complete flags") {
    auto count_flags = [](int q, int window) {
        std::uint64_t n = 0;
        for_each_flag(q, window, [&](const FlagPoint& fp) {
            REQUIRE(static_cast<int>(fp.chain.size()) == window - 1);
            for (int j = 0; j < window - 1; ++j) {
                REQUIRE(fp.chain[static_cast<std::size_t>(j)].dim() == j + 1);
                if (j > 0)
                    REQUIRE(fp.chain[static_cast<std::size_t>(j)].contains(
                        fp.chain[static_cast<std::size_t>(j - 1)]));
            }
            ++n;
        });
        return n;
    };
    CHECK(count_flags(2, 2) == 3);
    CHECK(count_flags(2, 3) == 21);
    CHECK(count_flags(3, 3) == 52);
    CHECK(count_flags(2, 4) == 315);
}

TEST_CASE("subrepresentation counts") {
    CHECK(count_subrepresentations(2, 2, DimensionVector(2)) == 1);
    CHECK(count_subrepresentations(2, 2, DimensionVector::dim_M(2)) == 1);

    const Permutation w321 = from_one_line("321");
    CHECK(count_subrepresentations(2, 2, rank_vector(w321)) == 27);
    CHECK(count_subrepresentations(2, 3, rank_vector(w321)) == 64);
    CHECK(count_subrepresentations(2, 2, smooth_vector(w321)) == 21);
    CHECK(count_subrepresentations(2, 3, smooth_vector(w321)) == 52);

    CHECK(error_kind([] { count_subrepresentations(2, 2, DimensionVector(3)); }) ==
          ErrorKind::ShapeMismatch);
    DimensionVector bad(2);
    bad.at(1, 1) = 2;
    CHECK(error_kind([&] { count_subrepresentations(2, 2, bad); }) == ErrorKind::ShapeMismatch);
    CHECK(error_kind([] { count_subrepresentations(5, 2, DimensionVector(5)); }) ==
          ErrorKind::BudgetExceeded);
    CHECK(error_kind([] { count_subrepresentations(2, 7, DimensionVector(2)); }) ==
          ErrorKind::BudgetExceeded);
}

TEST_CASE("Schubert point counts and the cell-count oracle agree everywhere") {
    CHECK(count_schubert_points(Permutation::identity(4), 2) == 1);
    CHECK(count_schubert_points(from_one_line("213"), 2) == 3);
    CHECK(count_schubert_points(from_one_line("321"), 2) == 21);
    CHECK(count_schubert_points(from_one_line("4321"), 2) == 315);

    CHECK(bruhat_interval_point_count(Permutation::identity(4), 2) == 1);
    CHECK(bruhat_interval_point_count(from_one_line("213"), 2) == 3);
    CHECK(bruhat_interval_point_count(from_one_line("321"), 2) == 21);
    CHECK(bruhat_interval_point_count(from_one_line("654321"), 2) == 615195);

    // The flag enumerator and the Bruhat-cell sum are independent
    // implementations; they must agree for every w, smooth or not.
    for (const Permutation& w : all_permutations(4))
        for (int q : {2, 3})
            CHECK(count_schubert_points(w, q) == bruhat_interval_point_count(w, q));

    CHECK(error_kind([] { count_schubert_points(from_one_line("213"), 7); }) ==
          ErrorKind::BudgetExceeded);
    CHECK(error_kind([] { bruhat_interval_point_count(from_one_line("2134567"), 2); }) ==
          ErrorKind::BudgetExceeded);
}

TEST_CASE("Bott-Samelson towers have (q+1)^N points, counted stepwise") {
    CHECK(count_bott_samelson_points(parse_word(4, ""), 2) == 1);
    CHECK(count_bott_samelson_points(parse_word(3, "1 2 1"), 2) == 27);
    CHECK(count_bott_samelson_points(parse_word(4, "2 1"), 2) == 9);
    for (const Permutation& w : all_permutations(4)) {
        const ReducedWord word = some_reduced_word(w);
        for (int q : {2, 3})
            CHECK(count_bott_samelson_points(word, q) ==
                  power(static_cast<std::uint64_t>(q) + 1, word.size()));
    }
    CHECK(error_kind([] { count_bott_samelson_points(ReducedWord{3, {1, 1}}, 2); }) ==
          ErrorKind::NotReduced);
}

TEST_CASE("tower and rank-table counts realize the resolution cardinalities") {
    // Equal for every window-3 permutation and the four minimal singular
    // window-4 cases...
    for (const char* text : {"321", "231", "312", "213", "132", "4231", "3412"}) {
        const Permutation w = from_one_line(text);
        const ReducedWord word = geometrically_compatible_word(w);
        for (int q : {2, 3}) {
            const std::uint64_t tower = count_bott_samelson_points(word, q);
            CHECK(tower == power(static_cast<std::uint64_t>(q) + 1, length(w)));
            CHECK(count_subrepresentations(w.window() - 1, q, rank_vector(w)) == tower);
        }
    }

    // ...while the singular Schubert varieties themselves are strictly
    // smaller than their towers: the resolution has fat fibers.
    CHECK(count_subrepresentations(3, 2, rank_vector(from_one_line("4231"))) == 243);
    CHECK(count_schubert_points(from_one_line("4231"), 2) == 171);
    CHECK(count_subrepresentations(3, 2, rank_vector(from_one_line("3412"))) == 81);
    CHECK(count_schubert_points(from_one_line("3412"), 2) == 75);

    // Smooth case: the rank-table count with the smooth-case table equals
    // the Schubert count itself.
    for (const char* text : {"321", "312", "132", "3214", "4321", "43251"}) {
        const Permutation w = from_one_line(text);
        REQUIRE(is_smooth(w));
        CHECK(count_subrepresentations(w.window() - 1, 2, smooth_vector(w)) ==
              count_schubert_points(w, 2));
    }
}

TEST_CASE("a spent wall-clock budget aborts enumeration") {
    const Budget spent = Budget::wall_clock_ms(0);
    CHECK(error_kind([&] { count_schubert_points(from_one_line("54321"), 3, &spent); }) ==
          ErrorKind::BudgetExceeded);
    const Budget lots = Budget::wall_clock_ms(600000);
    CHECK(count_schubert_points(from_one_line("321"), 2, &lots) == 21);
}
