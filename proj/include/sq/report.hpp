#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "sq/bsmap.hpp"
#include "sq/dimvec.hpp"
#include "sq/gridquiver.hpp"
#include "sq/perm.hpp"
#include "sq/words.hpp"

namespace sq {

// All CLI-facing serialization uses ordered JSON: key order is part of the
// output contract (reports round-trip byte-identically).
using json = nlohmann::ordered_json;

json one_line_json(const Permutation& w);
json dimension_vector_json(const DimensionVector& d);
json free_vertices_json(const std::vector<FreeVertex>& free);
json inclusions_json(const InclusionConditions& inc);
json assignment_json(const VertexAssignment& assignment);
json count_json(std::uint64_t count, const std::string& oracle, int q);

/// Everything the analysis commands print about one permutation; the word
/// and assignment slots are filled by the decomposition commands only.
struct Report {
    Permutation perm;
    int length = 0;
    bool smooth = false;
    DimensionVector rank;
    std::vector<FreeVertex> free;
    std::int64_t dim_r = 0;
    std::optional<DimensionVector> smooth_vec;
    std::optional<std::int64_t> dim_e;
    std::optional<ReducedWord> word;
    std::optional<VertexAssignment> assignment;
};

/// Rank data, free vertices, smoothness, expected dimensions.  Validates
/// internal consistency (length = free-vertex count = Euler dimension).
Report analyze_report(const Permutation& w);

/// analyze_report plus a geometrically compatible word and its vertex
/// assignment.
Report decompose_report(const Permutation& w);

/// analyze_report plus the given word's vertex assignment; the word must be
/// geometrically compatible with w.
Report bsmap_report(const Permutation& w, const ReducedWord& word);

json report_json(const Report& report);
std::string report_text(const Report& report);

} // namespace sq
