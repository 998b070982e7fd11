#include "sq/report.hpp"

#include <sstream>
#include <stdexcept>

#include "sq/errors.hpp"

namespace sq {

json one_line_json(const Permutation& w) {
    json arr = json::array();
    for (int v : w.images()) arr.push_back(v);
    return arr;
}

json dimension_vector_json(const DimensionVector& d) {
    json rows = json::array();
    for (int i = 1; i <= d.n() + 1; ++i) {
        json row = json::array();
        for (int j = 1; j <= d.n(); ++j) row.push_back(d.at(i, j));
        rows.push_back(std::move(row));
    }
    json out;
    out["n"] = d.n();
    out["rows"] = std::move(rows);
    return out;
}

json free_vertices_json(const std::vector<FreeVertex>& free) {
    json arr = json::array();
    for (const FreeVertex& v : free) {
        json entry;
        entry["row"] = v.row;
        entry["col"] = v.col;
        entry["value"] = v.value;
        arr.push_back(std::move(entry));
    }
    return arr;
}

json inclusions_json(const InclusionConditions& inc) {
    json cols = json::array();
    for (int q = 1; q < inc.window; ++q) {
        json entry;
        entry["q"] = q;
        entry["lower"] = inc.lower[q - 1];
        entry["upper"] = inc.upper[q - 1];
        cols.push_back(std::move(entry));
    }
    json out;
    out["window"] = inc.window;
    out["columns"] = std::move(cols);
    return out;
}

json assignment_json(const VertexAssignment& assignment) {
    json word = json::array();
    for (int letter : assignment.word.letters) word.push_back(letter);
    json targets = json::array();
    for (const AssignmentTarget& t : assignment.targets) {
        json entry;
        entry["k"] = t.k;
        entry["letter"] = t.letter;
        entry["row"] = t.row;
        entry["col"] = t.col;
        targets.push_back(std::move(entry));
    }
    json out;
    out["word"] = std::move(word);
    out["targets"] = std::move(targets);
    return out;
}

json count_json(std::uint64_t count, const std::string& oracle, int q) {
    json out;
    out["count"] = count;
    out["oracle"] = oracle;
    out["q"] = q;
    return out;
}

Report analyze_report(const Permutation& w) {
    Report report{.perm = w,
                  .length = length(w),
                  .smooth = is_smooth(w),
                  .rank = rank_vector(w),
                  .free = {},
                  .dim_r = 0,
                  .smooth_vec = std::nullopt,
                  .dim_e = std::nullopt,
                  .word = std::nullopt,
                  .assignment = std::nullopt};
    report.free = free_vertices(report.rank);
    const GridQuiver quiver = build_quiver(report.rank.n());
    report.dim_r = expected_grassmannian_dim(quiver, report.rank);
    if (report.smooth) {
        report.smooth_vec = smooth_vector(w);
        report.dim_e = expected_grassmannian_dim(quiver, *report.smooth_vec);
    }
    // Three independently computed numbers must agree; a mismatch means the
    // library itself is inconsistent, not that the input was bad.
    if (report.length != static_cast<int>(report.free.size()) ||
        static_cast<std::int64_t>(report.length) != report.dim_r ||
        (report.dim_e && *report.dim_e != report.dim_r)) {
        throw std::logic_error("internal report inconsistency for " + w.to_string());
    }
    return report;
}

Report decompose_report(const Permutation& w) {
    Report report = analyze_report(w);
    report.word = geometrically_compatible_word(w);
    report.assignment = bs_vertex_assignment(*report.word, w);
    return report;
}

Report bsmap_report(const Permutation& w, const ReducedWord& word) {
    Report report = analyze_report(w);
    report.assignment = bs_vertex_assignment(word, w);
    report.word = word;
    return report;
}

json report_json(const Report& report) {
    json out;
    out["one_line"] = one_line_json(report.perm);
    out["window"] = report.perm.window();
    out["length"] = report.length;
    out["smooth"] = report.smooth;
    out["rank_vector"] = dimension_vector_json(report.rank);
    out["free_vertices"] = free_vertices_json(report.free);
    out["expected_dim_r"] = report.dim_r;
    if (report.smooth_vec) {
        out["smooth_vector"] = dimension_vector_json(*report.smooth_vec);
        out["expected_dim_e"] = *report.dim_e;
    }
    if (report.word) {
        json letters = json::array();
        for (int letter : report.word->letters) letters.push_back(letter);
        out["word"] = std::move(letters);
    }
    if (report.assignment) out["assignment"] = assignment_json(*report.assignment);
    return out;
}

namespace {

void render_grid(std::ostringstream& out, const DimensionVector& d) {
    int max_entry = 0;
    for (int i = 1; i <= d.n() + 1; ++i)
        for (int j = 1; j <= d.n(); ++j) max_entry = std::max(max_entry, d.at(i, j));
    const int width = max_entry >= 10 ? 2 : 1;
    for (int i = 1; i <= d.n() + 1; ++i) {
        out << " ";
        for (int j = 1; j <= d.n(); ++j) {
            out << " ";
            const std::string cell = std::to_string(d.at(i, j));
            for (int pad = static_cast<int>(cell.size()); pad < width; ++pad) out << " ";
            out << cell;
        }
        out << "\n";
    }
}

} // namespace

std::string report_text(const Report& report) {
    std::ostringstream out;
    out << "w = " << report.perm.to_string() << "  (window " << report.perm.window() << ")\n";
    out << "length = " << report.length << "\n";
    out << "smooth = " << (report.smooth ? "yes" : "no") << "\n";
    out << "rank vector (rows 1.." << report.rank.n() + 1 << ", cols 1.." << report.rank.n()
        << "):\n";
    render_grid(out, report.rank);
    out << "free vertices (row, col, value):";
    if (report.free.empty()) {
        out << " none";
    } else {
        for (const FreeVertex& v : report.free)
            out << " (" << v.row << "," << v.col << "," << v.value << ")";
    }
    out << "\n";
    out << "expected Grassmannian dimension at rank vector = " << report.dim_r << "\n";
    if (report.smooth_vec) {
        out << "smooth cell vector:\n";
        render_grid(out, *report.smooth_vec);
        out << "expected Grassmannian dimension at cell vector = " << *report.dim_e << "\n";
    }
    if (report.word) {
        out << "compatible word: ";
        out << (report.word->letters.empty() ? "(empty)" : report.word->to_string()) << "\n";
    }
    if (report.assignment) {
        out << "vertex assignment (k: letter -> (row, col)):\n";
        if (report.assignment->targets.empty()) out << "  (empty word: single point)\n";
        for (const AssignmentTarget& t : report.assignment->targets) {
            out << "  k=" << t.k << ": s_" << t.letter << " -> (" << t.row << "," << t.col
                << ")\n";
        }
    }
    return out.str();
}

} // namespace sq
