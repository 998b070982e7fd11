#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sq/budget.hpp"
#include "sq/dimvec.hpp"
#include "sq/errors.hpp"
#include "sq/fforacle.hpp"
#include "sq/gridquiver.hpp"
#include "sq/perm.hpp"
#include "sq/report.hpp"
#include "sq/verify.hpp"
#include "sq/words.hpp"

namespace {

sq::Budget make_budget() {
    const char* env = std::getenv("SQ_BUDGET_MS");
    long long ms = 120000;
    if (env && *env) {
        try {
            ms = std::stoll(env);
        } catch (...) {
            ms = 120000;
        }
    }
    if (ms <= 0) return sq::Budget{}; // 0 or negative disables the wall clock
    return sq::Budget::wall_clock_ms(ms);
}

void emit(const nlohmann::ordered_json& body, const std::string& text, bool json_out) {
    if (json_out)
        std::cout << body.dump(2) << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-quiver models of Schubert varieties and Bott-Samelson towers"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit machine-readable JSON");

    std::string perm_text;
    std::string word_text;
    std::string vector_kind = "r";
    std::string oracle = "subrep";
    std::string suite = "all";
    int q = 2;
    int window = 0;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "rank table, free vertices, smoothness, expected dimensions");
    analyze->add_option("perm", perm_text, "permutation in one-line notation")->required();

    CLI::App* decompose = app.add_subcommand(
        "decompose", "geometrically compatible reduced word and its vertex assignment");
    decompose->add_option("perm", perm_text, "permutation in one-line notation")->required();

    CLI::App* bsmap =
        app.add_subcommand("bs-map", "vertex assignment of a compatible reduced word");
    bsmap->add_option("perm", perm_text, "permutation in one-line notation")->required();
    bsmap->add_option("--word", word_text,
                      "reduced word, space-separated letters (defaults to a computed one)");

    CLI::App* euler = app.add_subcommand(
        "euler", "expected Grassmannian dimension from the Euler form");
    euler->add_option("perm", perm_text, "permutation in one-line notation")->required();
    euler->add_option("--vector", vector_kind, "which dimension vector: rank (r) or cell (e)")
        ->check(CLI::IsMember({"r", "e"}));

    CLI::App* count = app.add_subcommand(
        "count", "finite-field point counts from the independent oracles");
    count->add_option("perm", perm_text, "permutation in one-line notation")->required();
    count->add_option("--vector", vector_kind, "which dimension vector: rank (r) or cell (e)")
        ->check(CLI::IsMember({"r", "e"}));
    count->add_option("--q", q, "field size (prime)");
    count->add_option("--oracle", oracle, "which counting oracle")
        ->check(CLI::IsMember({"subrep", "schubert", "bott-samelson", "bruhat"}));

    CLI::App* verify =
        app.add_subcommand("verify", "run exhaustive invariant suites over a symmetric group");
    verify->add_option("--window", window, "symmetric group size to sweep")->required();
    verify->add_option("--q", q, "field size for the counting checks");
    verify->add_option("--suite", suite, "rank | inclusions | words | euler | counts | all");

    // lets the global --json appear after the subcommand name
    for (CLI::App* sub : {analyze, decompose, bsmap, euler, count, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const sq::Budget budget = make_budget();
        if (*analyze) {
            const sq::Permutation w = sq::from_one_line(perm_text);
            const sq::Report report = sq::analyze_report(w);
            emit(sq::report_json(report), sq::report_text(report), json_out);
            return 0;
        }
        if (*decompose) {
            const sq::Permutation w = sq::from_one_line(perm_text);
            const sq::Report report = sq::decompose_report(w);
            emit(sq::report_json(report), sq::report_text(report), json_out);
            return 0;
        }
        if (*bsmap) {
            const sq::Permutation w = sq::from_one_line(perm_text);
            const sq::ReducedWord word = bsmap->count("--word") > 0
                                             ? sq::parse_word(w.window(), word_text)
                                             : sq::geometrically_compatible_word(w);
            const sq::Report report = sq::bsmap_report(w, word);
            emit(sq::report_json(report), sq::report_text(report), json_out);
            return 0;
        }
        if (*euler) {
            const sq::Permutation w = sq::from_one_line(perm_text);
            const sq::DimensionVector vec =
                vector_kind == "r" ? sq::rank_vector(w) : sq::smooth_vector(w);
            const sq::GridQuiver quiver = sq::build_quiver(vec.n());
            const std::int64_t dim = sq::expected_grassmannian_dim(quiver, vec);
            nlohmann::ordered_json body;
            body["one_line"] = sq::one_line_json(w);
            body["window"] = w.window();
            body["vector"] = vector_kind;
            body["dimension_vector"] = sq::dimension_vector_json(vec);
            body["dimension"] = dim;
            std::ostringstream text;
            text << "w = " << w.to_string() << "  (window " << w.window() << ")\n"
                 << "vector = " << (vector_kind == "r" ? "rank" : "cell") << "\n"
                 << "expected Grassmannian dimension = " << dim << "\n";
            emit(body, text.str(), json_out);
            return 0;
        }
        if (*count) {
            const sq::Permutation w = sq::from_one_line(perm_text);
            std::uint64_t points = 0;
            if (oracle == "subrep") {
                const sq::DimensionVector vec =
                    vector_kind == "r" ? sq::rank_vector(w) : sq::smooth_vector(w);
                points = sq::count_subrepresentations(vec.n(), q, vec, &budget);
            } else if (oracle == "schubert") {
                points = sq::count_schubert_points(w, q, &budget);
            } else if (oracle == "bott-samelson") {
                points = sq::count_bott_samelson_points(sq::geometrically_compatible_word(w), q,
                                                        &budget);
            } else {
                points = sq::bruhat_interval_point_count(w, q);
            }
            std::ostringstream text;
            text << "count = " << points << "  (oracle " << oracle << ", q=" << q << ")\n";
            emit(sq::count_json(points, oracle, q), text.str(), json_out);
            return 0;
        }
        if (*verify) {
            const sq::SuiteReport report = sq::run_verify_suite(suite, window, q, &budget);
            emit(sq::suite_report_json(report), sq::suite_report_text(report), json_out);
            return report.all_passed() ? 0 : 1;
        }
    } catch (const sq::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
