#include "sq/dimvec.hpp"

#include <algorithm>
#include <string>

#include "sq/errors.hpp"

namespace sq {

DimensionVector rank_vector(const Permutation& w) {
    if (w.window() < 3)
        fail(ErrorKind::WindowTooSmall, "rank table needs window >= 3, got " + std::to_string(w.window()));
    const int n = w.window() - 1;
    DimensionVector rv(n);
    for (int p = 1; p <= n + 1; ++p)
        for (int q = 1; q <= n; ++q)
            rv.at(p, q) = rank_count(w, p, q);
    return rv;
}

DimensionVector apply_simple_update(const DimensionVector& rv, const Permutation& w, int i) {
    if (rv.n() != w.window() - 1)
        fail(ErrorKind::ShapeMismatch, "rank table does not match the permutation's window");
    if (i < 1 || i >= w.window())
        fail(ErrorKind::IndexOutOfRange, "transposition index " + std::to_string(i) + " outside window");
    const int qi = w.preimage(i);
    const int qi1 = w.preimage(i + 1);
    if (qi > qi1)
        fail(ErrorKind::LengthDecrease,
             "left product with s_" + std::to_string(i) + " shortens " + w.to_string());
    // Row i loses one unit exactly on columns w^{-1}(i) <= q < w^{-1}(i+1):
    // there the count of values <= i includes i but not yet i+1, and the two
    // values trade places under s_i.
    DimensionVector out = rv;
    for (int q = qi; q < qi1 && q <= rv.cols(); ++q)
        out.at(i, q) = rv.at(i, q) - 1;
    return out;
}

std::vector<FreeVertex> free_vertices(const DimensionVector& rv) {
    std::vector<FreeVertex> out;
    for (int i = 1; i <= rv.rows(); ++i)
        for (int j = 1; j <= rv.cols(); ++j) {
            const int v = rv.at(i, j);
            if (v < i && v > rv.at_or_zero(i - 1, j) && v > rv.at_or_zero(i, j - 1))
                out.push_back({i, j, v});
        }
    return out; // row-major construction order = sorted by (row, col)
}

DimensionVector smooth_vector(const Permutation& w) {
    if (!is_smooth(w))
        fail(ErrorKind::NotSmooth, w.to_string() + " contains 4231 or 3412");
    const DimensionVector rv = rank_vector(w);
    DimensionVector e(rv.n());
    for (int i = 1; i <= rv.rows(); ++i)
        for (int j = 1; j <= rv.cols(); ++j) {
            const int r = rv.at(i, j);
            if (r == 0 || r == std::min(i, j))
                e.at(i, j) = r;
            else
                e.at(i, j) = std::max(e.at_or_zero(i - 1, j), e.at_or_zero(i, j - 1));
        }
    return e;
}

InclusionConditions inclusion_bounds(const Permutation& w) {
    const DimensionVector rv = rank_vector(w);
    const int window = w.window();
    InclusionConditions inc;
    inc.window = window;
    inc.lower.assign(static_cast<std::size_t>(rv.cols()), 0);
    inc.upper.assign(static_cast<std::size_t>(rv.cols()), window);
    for (int q = 1; q <= rv.cols(); ++q) {
        for (int i = 1; i <= rv.rows(); ++i)
            if (rv.at(i, q) == q) { inc.upper[q - 1] = i; break; }
        for (int i = rv.rows(); i >= 1; --i)
            if (rv.at(i, q) == i) { inc.lower[q - 1] = i; break; }
    }
    return inc;
}

InclusionConditions extract_inclusions(const Permutation& w) {
    if (!is_smooth(w))
        fail(ErrorKind::NotSmooth, w.to_string() + " contains 4231 or 3412");
    return inclusion_bounds(w);
}

std::vector<std::pair<int, int>> crossing_pairs(const InclusionConditions& inc) {
    const int window = inc.window;
    const int cols = static_cast<int>(inc.upper.size());

    // The stored bounds deliberately keep redundant conditions; crossing is a
    // property of the essential ones.  An upper bound V_q <= F_p is implied
    // by any later column's upper V_q2 <= F_p2 with p2 <= p (since V_q is
    // nested inside V_q2); dually a lower bound F_p' <= V_q is implied by an
    // earlier column's lower with p2' >= p'.
    std::vector<bool> essential_upper(static_cast<std::size_t>(cols), false);
    std::vector<bool> essential_lower(static_cast<std::size_t>(cols), false);
    for (int q = 1; q <= cols; ++q) {
        if (inc.upper[q - 1] < window) {
            bool implied = false;
            for (int q2 = q + 1; q2 <= cols && !implied; ++q2)
                implied = inc.upper[q2 - 1] < window && inc.upper[q2 - 1] <= inc.upper[q - 1];
            essential_upper[q - 1] = !implied;
        }
        if (inc.lower[q - 1] > 0) {
            bool implied = false;
            for (int q2 = 1; q2 < q && !implied; ++q2)
                implied = inc.lower[q2 - 1] >= inc.lower[q - 1];
            essential_lower[q - 1] = !implied;
        }
    }

    std::vector<std::pair<int, int>> out;
    for (int q = 1; q <= cols; ++q) {
        if (!essential_upper[q - 1]) continue;
        for (int q2 = q + 1; q2 <= cols; ++q2) {
            if (!essential_lower[q2 - 1]) continue;
            if (inc.upper[q - 1] > inc.lower[q2 - 1]) out.emplace_back(q, q2);
        }
    }
    return out;
}

} // namespace sq
