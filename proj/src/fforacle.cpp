#include "sq/fforacle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sq/bsmap.hpp"
#include "sq/dimvec.hpp"
#include "sq/errors.hpp"

namespace sq {

namespace {

const PrimeField& cached_field(int q) {
    static std::map<int, PrimeField> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, PrimeField(q)).first;
    return it->second;
}

// In-place reduced row echelon form; returns the nonzero rows, sorted by
// pivot, pivots normalized to 1 and cleared above and below.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, const PrimeField& f) {
    if (rows.empty()) return rows;
    const int m = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = f.inv(rows[rank][col]);
        for (int c = col; c < m; ++c) rows[rank][c] = f.mul(rows[rank][c], inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const int factor = rows[r][col];
            for (int c = col; c < m; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(static_cast<std::size_t>(rank));
    return rows;
}

int pivot_of(const std::vector<int>& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return static_cast<int>(c);
    return -1;
}

} // namespace

Subspace Subspace::zero(int q, int ambient) {
    cached_field(q); // validates primality
    if (ambient < 0) fail(ErrorKind::IndexOutOfRange, "negative ambient dimension");
    return Subspace(q, ambient);
}

Subspace Subspace::full(int q, int ambient) {
    Subspace s = zero(q, ambient);
    for (int k = 0; k < ambient; ++k) {
        std::vector<int> row(static_cast<std::size_t>(ambient), 0);
        row[static_cast<std::size_t>(k)] = 1;
        s.basis_.push_back(std::move(row));
    }
    return s;
}

Subspace Subspace::coordinate(int q, int ambient, int k) {
    if (k < 0 || k > ambient)
        fail(ErrorKind::IndexOutOfRange, "coordinate subspace dimension " + std::to_string(k) + " outside ambient");
    Subspace s = zero(q, ambient);
    for (int t = 0; t < k; ++t) {
        std::vector<int> row(static_cast<std::size_t>(ambient), 0);
        row[static_cast<std::size_t>(t)] = 1;
        s.basis_.push_back(std::move(row));
    }
    return s;
}

Subspace Subspace::span(int q, int ambient, const std::vector<std::vector<int>>& vectors) {
    const PrimeField& f = cached_field(q);
    Subspace s = zero(q, ambient);
    std::vector<std::vector<int>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            fail(ErrorKind::ShapeMismatch, "spanning vector does not match ambient dimension");
        std::vector<int> row(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) row[c] = f.reduce(v[c]);
        rows.push_back(std::move(row));
    }
    s.basis_ = rref(std::move(rows), f);
    return s;
}

bool Subspace::contains(const Subspace& other) const {
    if (q_ != other.q_ || ambient_ != other.ambient_)
        fail(ErrorKind::ShapeMismatch, "subspaces live in different spaces");
    if (other.dim() > dim()) return false;
    std::vector<std::vector<int>> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return static_cast<int>(rref(std::move(rows), cached_field(q_)).size()) == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    if (q_ != other.q_ || ambient_ != other.ambient_)
        fail(ErrorKind::ShapeMismatch, "subspaces live in different spaces");
    std::vector<std::vector<int>> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    Subspace s = zero(q_, ambient_);
    s.basis_ = rref(std::move(rows), cached_field(q_));
    return s;
}

int Subspace::intersection_dim(const Subspace& other) const {
    return dim() + other.dim() - sum(other).dim();
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis_ < b.basis_;
}

std::vector<Subspace> enumerate_subspaces(int q, int ambient, int dim, const Subspace& lower,
                                          const Subspace& upper) {
    if (q != 2 && q != 3 && q != 5)
        fail(ErrorKind::BudgetExceeded, "subspace enumeration restricted to q in {2,3,5}");
    if (lower.q() != q || upper.q() != q || lower.ambient() != ambient || upper.ambient() != ambient)
        fail(ErrorKind::BadSandwich, "sandwich bounds do not match the requested space");
    if (!upper.contains(lower)) fail(ErrorKind::BadSandwich, "lower bound is not inside the upper bound");
    if (dim < lower.dim() || dim > upper.dim())
        fail(ErrorKind::BadSandwich, "requested dimension outside [dim lower, dim upper]");

    const PrimeField& f = cached_field(q);

    // Work in the quotient upper/lower: its coordinates are the pivot
    // columns of upper's basis that are not pivot columns of lower's (lower
    // is inside upper, so its pivot set embeds).  A quotient vector with
    // coordinates c lifts to sum_t c_t * (row of upper with the t-th
    // complementary pivot).
    std::vector<int> lower_pivots;
    for (const auto& row : lower.basis()) lower_pivots.push_back(pivot_of(row));
    std::vector<const std::vector<int>*> reps;
    for (const auto& row : upper.basis()) {
        const int piv = pivot_of(row);
        if (std::find(lower_pivots.begin(), lower_pivots.end(), piv) == lower_pivots.end())
            reps.push_back(&row);
    }
    const int m = static_cast<int>(reps.size()); // dim of the quotient
    const int k = dim - lower.dim();             // subspace dim inside it

    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(lower);
        return out;
    }

    // All k x m reduced-echelon shapes: choose pivot columns, then run an
    // odometer over the free entries (row r, col c) with c > pivot[r] and c
    // not itself a pivot column.
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pivots[static_cast<std::size_t>(t)] = t;
    while (true) {
        std::vector<std::pair<int, int>> free_cells;
        std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
        for (int piv : pivots) is_pivot[static_cast<std::size_t>(piv)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)]) free_cells.emplace_back(r, c);

        std::vector<int> fill(free_cells.size(), 0);
        while (true) {
            // Assemble the quotient matrix, lift its rows, and canonicalize
            // together with the lower bound.
            std::vector<std::vector<int>> vectors = lower.basis();
            for (int r = 0; r < k; ++r) {
                std::vector<int> quotient_row(static_cast<std::size_t>(m), 0);
                quotient_row[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
                for (std::size_t t = 0; t < free_cells.size(); ++t)
                    if (free_cells[t].first == r)
                        quotient_row[static_cast<std::size_t>(free_cells[t].second)] = fill[t];
                std::vector<int> lifted(static_cast<std::size_t>(ambient), 0);
                for (int c = 0; c < m; ++c) {
                    const int coeff = quotient_row[static_cast<std::size_t>(c)];
                    if (coeff == 0) continue;
                    const std::vector<int>& rep = *reps[static_cast<std::size_t>(c)];
                    for (int t = 0; t < ambient; ++t)
                        lifted[static_cast<std::size_t>(t)] =
                            f.add(lifted[static_cast<std::size_t>(t)],
                                  f.mul(coeff, rep[static_cast<std::size_t>(t)]));
                }
                vectors.push_back(std::move(lifted));
            }
            out.push_back(Subspace::span(q, ambient, vectors));

            // Advance the odometer.
            std::size_t t = 0;
            while (t < fill.size()) {
                if (++fill[t] < q) break;
                fill[t++] = 0;
            }
            if (t == fill.size()) break;
        }

        // Next pivot combination in lexicographic order.
        int r = k - 1;
        while (r >= 0 && pivots[static_cast<std::size_t>(r)] == m - k + r) --r;
        if (r < 0) break;
        ++pivots[static_cast<std::size_t>(r)];
        for (int t = r + 1; t < k; ++t)
            pivots[static_cast<std::size_t>(t)] = pivots[static_cast<std::size_t>(t - 1)] + 1;
    }

    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Shared flag recursion: extend the chain one subspace at a time; `admit`
// may reject a freshly chosen V_j (with 1-based j) to prune the subtree.
void walk_flags(int q, int window, int j, FlagPoint& flag,
                const std::function<bool(int, const Subspace&)>& admit,
                const std::function<void(const FlagPoint&)>& leaf, const Budget* budget) {
    if (budget) budget->check("flag enumeration");
    if (j == window) {
        leaf(flag);
        return;
    }
    const Subspace prev = flag.chain.empty() ? Subspace::zero(q, window) : flag.chain.back();
    for (const Subspace& next : enumerate_subspaces(q, window, j, prev, Subspace::full(q, window))) {
        if (!admit(j, next)) continue;
        flag.chain.push_back(next);
        walk_flags(q, window, j + 1, flag, admit, leaf, budget);
        flag.chain.pop_back();
    }
}

} // namespace

void for_each_flag(int q, int window, const std::function<void(const FlagPoint&)>& visit,
                   const Budget* budget) {
    FlagPoint flag;
    flag.q = q;
    flag.window = window;
    walk_flags(q, window, 1, flag, [](int, const Subspace&) { return true; }, visit, budget);
}

std::uint64_t count_subrepresentations(int n, int q, const DimensionVector& e, const Budget* budget) {
    if (e.n() != n) fail(ErrorKind::ShapeMismatch, "dimension vector does not match n");
    if (n > 4)
        fail(ErrorKind::BudgetExceeded, "subrepresentation enumeration capped at n = 4");
    if (q != 2 && q != 3 && q != 5)
        fail(ErrorKind::BudgetExceeded, "subrepresentation enumeration restricted to q in {2,3,5}");
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
            if (e.at(i, j) < 0 || e.at(i, j) > i)
                fail(ErrorKind::ShapeMismatch,
                     "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") exceeds the ambient dimension");

    const int ambient = n + 1;
    std::vector<Subspace> coord;
    for (int i = 0; i <= ambient; ++i) coord.push_back(Subspace::coordinate(q, ambient, i));

    // Column-major cell order; chosen[(j-1)*(n+1) + (i-1)] = N_{i,j}.
    std::vector<Subspace> chosen(static_cast<std::size_t>(ambient) * n, Subspace::zero(q, ambient));
    const std::function<std::uint64_t(int)> recurse = [&](int cell) -> std::uint64_t {
        if (cell == n * ambient) return 1;
        if (budget) budget->check("subrepresentation enumeration");
        const int j = cell / ambient + 1;
        const int i = cell % ambient + 1;
        Subspace low = Subspace::zero(q, ambient);
        if (i > 1) low = chosen[static_cast<std::size_t>(cell - 1)];
        if (j > 1) low = low.sum(chosen[static_cast<std::size_t>(cell - ambient)]);
        const int want = e.at(i, j);
        if (want < low.dim() || want > i) return 0;
        std::uint64_t total = 0;
        for (const Subspace& s : enumerate_subspaces(q, ambient, want, low, coord[static_cast<std::size_t>(i)])) {
            chosen[static_cast<std::size_t>(cell)] = s;
            total += recurse(cell + 1);
        }
        return total;
    };
    return recurse(0);
}

std::uint64_t count_schubert_points(const Permutation& w, int q, const Budget* budget) {
    const int window = w.window();
    if (window > 5) fail(ErrorKind::BudgetExceeded, "flag enumeration capped at window 5");
    if (q != 2 && q != 3) fail(ErrorKind::BudgetExceeded, "Schubert counting restricted to q in {2,3}");

    std::vector<Subspace> coord;
    for (int p = 0; p <= window; ++p) coord.push_back(Subspace::coordinate(q, window, p));

    // Rank conditions: dim(F_p cap V_j) >= #{k <= j : w(k) <= p}.  Checking
    // a flag member as soon as it is chosen prunes the whole subtree.
    const auto admit = [&](int j, const Subspace& vj) {
        for (int p = 1; p < window; ++p)
            if (vj.intersection_dim(coord[static_cast<std::size_t>(p)]) < rank_count(w, p, j)) return false;
        return true;
    };
    std::uint64_t count = 0;
    FlagPoint flag;
    flag.q = q;
    flag.window = window;
    walk_flags(q, window, 1, flag, admit, [&](const FlagPoint&) { ++count; }, budget);
    return count;
}

std::uint64_t count_bott_samelson_points(const ReducedWord& word, int q, const Budget* budget) {
    if (!is_reduced(word)) fail(ErrorKind::NotReduced, "Bott-Samelson towers need a reduced word");
    const int window = word.window;
    if (window > 5) fail(ErrorKind::BudgetExceeded, "flag enumeration capped at window 5");
    if (q != 2 && q != 3) fail(ErrorKind::BudgetExceeded, "Bott-Samelson counting restricted to q in {2,3}");

    const FlagConstraintTable table = bs_flag_constraints(word);

    // Current flag, positions 1..window-1; V^0 is the standard flag.
    std::vector<Subspace> flag;
    for (int i = 0; i <= window; ++i) flag.push_back(Subspace::coordinate(q, window, i));

    const std::function<std::uint64_t(int)> step = [&](int k) -> std::uint64_t {
        if (k > table.steps()) return 1;
        if (budget) budget->check("Bott-Samelson enumeration");
        const int i = table.freed[static_cast<std::size_t>(k - 1)];
        const Subspace saved = flag[static_cast<std::size_t>(i)];
        std::uint64_t total = 0;
        for (const Subspace& s : enumerate_subspaces(q, window, i, flag[static_cast<std::size_t>(i - 1)],
                                                     flag[static_cast<std::size_t>(i + 1)])) {
            flag[static_cast<std::size_t>(i)] = s;
            total += step(k + 1);
        }
        flag[static_cast<std::size_t>(i)] = saved;
        return total;
    };
    return step(1);
}

std::uint64_t bruhat_interval_point_count(const Permutation& w, int q) {
    const int window = w.window();
    if (window > 6) fail(ErrorKind::BudgetExceeded, "Bruhat interval enumeration capped at window 6");
    cached_field(q); // validates primality
    std::vector<int> images(static_cast<std::size_t>(window));
    for (int k = 1; k <= window; ++k) images[static_cast<std::size_t>(k - 1)] = k;
    std::uint64_t total = 0;
    do {
        const Permutation u(images);
        if (!bruhat_leq(u, w)) continue;
        std::uint64_t term = 1;
        for (int t = 0; t < length(u); ++t) term *= static_cast<std::uint64_t>(q);
        total += term;
    } while (std::next_permutation(images.begin(), images.end()));
    return total;
}

} // namespace sq
