#include "sq/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "sq/bsmap.hpp"
#include "sq/dimvec.hpp"
#include "sq/errors.hpp"
#include "sq/fforacle.hpp"
#include "sq/gridquiver.hpp"
#include "sq/perm.hpp"
#include "sq/words.hpp"

namespace sq {

namespace {

std::vector<Permutation> all_permutations(int window) {
    std::vector<int> images(static_cast<std::size_t>(window));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> group;
    do {
        group.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return group;
}

using CheckFn = std::function<std::optional<std::string>(const Permutation&)>;

SuiteItem check_over_group(const std::string& name, const std::vector<Permutation>& group,
                           const CheckFn& fn) {
    for (const Permutation& w : group) {
        std::optional<std::string> failure = fn(w);
        if (failure) return SuiteItem{name, false, "w=" + w.to_string() + ": " + *failure};
    }
    return SuiteItem{name, true, "checked " + std::to_string(group.size()) + " permutations"};
}

std::uint64_t power(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

std::vector<SuiteItem> rank_suite(const std::vector<Permutation>& group, int window) {
    std::vector<SuiteItem> items;
    items.push_back(check_over_group(
        "rank/table-shape", group, [&](const Permutation& w) -> std::optional<std::string> {
            const DimensionVector rv = rank_vector(w);
            const int rows = rv.n() + 1, cols = rv.n();
            for (int i = 1; i <= rows; ++i) {
                for (int j = 1; j <= cols; ++j) {
                    const int r = rv.at(i, j);
                    if (r < 0 || r > std::min(i, j))
                        return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of range";
                    if (j > 1 && (r < rv.at(i, j - 1) || r > rv.at(i, j - 1) + 1))
                        return "row step at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    if (i > 1 && (r < rv.at(i - 1, j) || r > rv.at(i - 1, j) + 1))
                        return "column step at (" + std::to_string(i) + "," + std::to_string(j) +
                               ")";
                }
                if (i == rows) {
                    for (int j = 1; j <= cols; ++j)
                        if (rv.at(rows, j) != j) return "bottom row not full";
                }
            }
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "rank/free-count-is-length", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const std::size_t count = free_vertices(rank_vector(w)).size();
            if (static_cast<int>(count) != length(w))
                return "free vertices " + std::to_string(count) + " vs length " +
                       std::to_string(length(w));
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "rank/free-rows-strictly-increase", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const std::vector<FreeVertex> free = free_vertices(rank_vector(w));
            for (std::size_t a = 1; a < free.size(); ++a) {
                if (free[a].row == free[a - 1].row && free[a].value <= free[a - 1].value)
                    return "values not increasing in row " + std::to_string(free[a].row);
            }
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "rank/rebuild-along-word", group, [&](const Permutation& w) -> std::optional<std::string> {
            const ReducedWord word = some_reduced_word(w);
            Permutation current = Permutation::identity(window);
            DimensionVector rv = rank_vector(current);
            for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
                rv = apply_simple_update(rv, current, *it);
                current = left_multiply_simple(SimpleTransposition{*it}, current);
            }
            if (!(current == w)) return "word does not rebuild the permutation";
            if (!(rv == rank_vector(w))) return "stepwise updates disagree with direct table";
            return std::nullopt;
        }));
    return items;
}

std::vector<SuiteItem> inclusions_suite(const std::vector<Permutation>& group) {
    std::vector<SuiteItem> items;
    items.push_back(check_over_group(
        "inclusions/lower-at-most-upper", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const InclusionConditions inc = inclusion_bounds(w);
            for (int q = 1; q < inc.window; ++q) {
                if (inc.lower[q - 1] > inc.upper[q - 1])
                    return "column " + std::to_string(q) + " has lower above upper";
            }
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "inclusions/smooth-has-no-crossing", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            if (!is_smooth(w)) return std::nullopt;
            const auto crossings = crossing_pairs(extract_inclusions(w));
            if (!crossings.empty())
                return "smooth permutation reports " + std::to_string(crossings.size()) +
                       " crossing pairs";
            return std::nullopt;
        }));
    return items;
}

std::vector<SuiteItem> words_suite(const std::vector<Permutation>& group) {
    std::vector<SuiteItem> items;
    items.push_back(check_over_group(
        "words/seed-word-evaluates-reduced", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const ReducedWord word = some_reduced_word(w);
            if (!(evaluate_word(word) == w)) return "seed word evaluates elsewhere";
            if (!is_reduced(word)) return "seed word not reduced";
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "words/compatible-word-found", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const ReducedWord word = geometrically_compatible_word(w);
            if (!is_geometrically_compatible(word, w))
                return "returned word is not geometrically compatible";
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "words/assignment-is-bijection", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const ReducedWord word = geometrically_compatible_word(w);
            const VertexAssignment assignment = bs_vertex_assignment(word, w);
            if (assignment.targets.size() != static_cast<std::size_t>(length(w)))
                return "assignment size differs from length";
            return std::nullopt;
        }));
    return items;
}

std::vector<SuiteItem> euler_suite(const std::vector<Permutation>& group, int window) {
    std::vector<SuiteItem> items;
    const int n = window - 1;
    const GridQuiver quiver = build_quiver(n);
    const DimensionVector ambient = DimensionVector::dim_M(n);
    items.push_back(check_over_group(
        "euler/rank-dimension-is-length", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const std::int64_t dim = expected_grassmannian_dim(quiver, rank_vector(w));
            if (dim != length(w))
                return "dimension " + std::to_string(dim) + " vs length " +
                       std::to_string(length(w));
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "euler/cell-dimension-is-length", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            if (!is_smooth(w)) return std::nullopt;
            const std::int64_t dim = expected_grassmannian_dim(quiver, smooth_vector(w));
            if (dim != length(w))
                return "dimension " + std::to_string(dim) + " vs length " +
                       std::to_string(length(w));
            return std::nullopt;
        }));
    {
        const GridRep M = build_M(quiver, FieldSpec::rationals());
        const std::int64_t hom = hom_dimension(M, M);
        const std::int64_t bilinear = euler_form(quiver, ambient, ambient);
        const std::int64_t closed = static_cast<std::int64_t>(n + 1) * (n + 2) / 2;
        const bool ok = hom == bilinear && hom == closed;
        std::ostringstream detail;
        if (ok)
            detail << "hom=" << hom << " matches bilinear form and closed form";
        else
            detail << "hom=" << hom << " bilinear=" << bilinear << " closed=" << closed;
        items.push_back(SuiteItem{"euler/endomorphisms-match-form", ok, detail.str()});
    }
    return items;
}

std::vector<SuiteItem> counts_suite(const std::vector<Permutation>& group, int window, int q,
                                    const Budget* budget) {
    std::vector<SuiteItem> items;
    const int n = window - 1;
    items.push_back(check_over_group(
        "counts/rank-subreps-match-tower", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            const std::uint64_t subreps =
                count_subrepresentations(n, q, rank_vector(w), budget);
            const std::uint64_t tower = power(static_cast<std::uint64_t>(q) + 1, length(w));
            const std::uint64_t bs =
                count_bott_samelson_points(geometrically_compatible_word(w), q, budget);
            if (subreps != tower || bs != tower)
                return "subreps=" + std::to_string(subreps) + " tower=" + std::to_string(tower) +
                       " stepwise=" + std::to_string(bs);
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "counts/smooth-cell-triple", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            if (!is_smooth(w)) return std::nullopt;
            const std::uint64_t subreps =
                count_subrepresentations(n, q, smooth_vector(w), budget);
            const std::uint64_t flags = count_schubert_points(w, q, budget);
            const std::uint64_t interval = bruhat_interval_point_count(w, q);
            if (subreps != flags || flags != interval)
                return "subreps=" + std::to_string(subreps) + " flags=" + std::to_string(flags) +
                       " interval=" + std::to_string(interval);
            return std::nullopt;
        }));
    items.push_back(check_over_group(
        "counts/singular-towers-differ", group,
        [&](const Permutation& w) -> std::optional<std::string> {
            if (is_smooth(w)) return std::nullopt;
            const std::uint64_t flags = count_schubert_points(w, q, budget);
            const std::uint64_t tower = power(static_cast<std::uint64_t>(q) + 1, length(w));
            if (flags == tower)
                return "singular variety counts like the smooth tower (" +
                       std::to_string(flags) + ")";
            return std::nullopt;
        }));
    return items;
}

} // namespace

int suite_window_cap(const std::string& suite) {
    if (suite == "rank" || suite == "inclusions") return 6;
    if (suite == "words" || suite == "euler") return 5;
    if (suite == "counts" || suite == "all") return 4;
    fail(ErrorKind::MalformedInput, "unknown suite '" + suite + "'");
}

SuiteReport run_verify_suite(const std::string& suite, int window, int q, const Budget* budget) {
    const int cap = suite_window_cap(suite);
    if (window < 3) fail(ErrorKind::WindowTooSmall, "verification needs window >= 3");
    if (window > cap)
        fail(ErrorKind::BudgetExceeded,
             "suite '" + suite + "' is capped at window " + std::to_string(cap));
    const bool counting = suite == "counts" || suite == "all";
    if (counting && q != 2 && q != 3)
        fail(ErrorKind::BudgetExceeded, "counting suites run at q in {2,3}");

    const std::vector<Permutation> group = all_permutations(window);
    SuiteReport report{suite, window, q, {}};
    auto append = [&report](std::vector<SuiteItem> items) {
        for (SuiteItem& item : items) report.items.push_back(std::move(item));
    };
    if (suite == "rank" || suite == "all") append(rank_suite(group, window));
    if (suite == "inclusions" || suite == "all") append(inclusions_suite(group));
    if (suite == "words" || suite == "all") append(words_suite(group));
    if (suite == "euler" || suite == "all") append(euler_suite(group, window));
    if (suite == "counts" || suite == "all") append(counts_suite(group, window, q, budget));
    return report;
}

nlohmann::ordered_json suite_report_json(const SuiteReport& report) {
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    out["window"] = report.window;
    out["q"] = report.q;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const SuiteItem& item : report.items) {
        nlohmann::ordered_json entry;
        entry["name"] = item.name;
        entry["passed"] = item.passed;
        entry["detail"] = item.detail;
        items.push_back(std::move(entry));
    }
    out["items"] = std::move(items);
    out["all_passed"] = report.all_passed();
    return out;
}

std::string suite_report_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite '" << report.suite << "' at window " << report.window << " (q=" << report.q
        << ")\n";
    for (const SuiteItem& item : report.items) {
        out << "  [" << (item.passed ? "PASS" : "FAIL") << "] " << item.name << " — "
            << item.detail << "\n";
    }
    out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return out.str();
}

} // namespace sq
