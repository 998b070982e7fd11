#include "sq/gridquiver.hpp"

#include <string>

#include "sq/errors.hpp"

namespace sq {

GridQuiver::GridQuiver(int n) : n_(n) {
    if (n < 2) fail(ErrorKind::NTooSmall, "grid quiver needs n >= 2");
    // Horizontal arrows first, then vertical, each block in row-major order.
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            arrows_.push_back({i, j, i, j + 1});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            arrows_.push_back({i, j, i + 1, j});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j)
            squares_.push_back({i, j});
}

int GridQuiver::vertex_index(int i, int j) const {
    if (i < 1 || i > rows() || j < 1 || j > cols())
        fail(ErrorKind::IndexOutOfRange,
             "vertex (" + std::to_string(i) + ", " + std::to_string(j) + ") outside grid");
    return (i - 1) * cols() + (j - 1);
}

int GridQuiver::arrow_index(int src_row, int src_col, int dst_row, int dst_col) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const Arrow& ar = arrows_[a];
        if (ar.src_row == src_row && ar.src_col == src_col && ar.dst_row == dst_row && ar.dst_col == dst_col)
            return static_cast<int>(a);
    }
    return -1;
}

GridQuiver build_quiver(int n) { return GridQuiver(n); }

DimensionVector::DimensionVector(int n) : n_(n) {
    if (n < 2) fail(ErrorKind::NTooSmall, "dimension vector needs n >= 2");
    entries_.assign(static_cast<std::size_t>(n + 1) * n, 0);
}

int DimensionVector::at(int i, int j) const {
    if (i < 1 || i > rows() || j < 1 || j > cols())
        fail(ErrorKind::IndexOutOfRange,
             "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside grid");
    return entries_[static_cast<std::size_t>(i - 1) * cols() + (j - 1)];
}

int& DimensionVector::at(int i, int j) {
    if (i < 1 || i > rows() || j < 1 || j > cols())
        fail(ErrorKind::IndexOutOfRange,
             "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside grid");
    return entries_[static_cast<std::size_t>(i - 1) * cols() + (j - 1)];
}

int DimensionVector::at_or_zero(int i, int j) const {
    if (i < 1 || i > rows() || j < 1 || j > cols()) return 0;
    return at(i, j);
}

DimensionVector DimensionVector::dim_M(int n) {
    DimensionVector d(n);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
            d.at(i, j) = i;
    return d;
}

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
    if (a.n() != b.n()) fail(ErrorKind::ShapeMismatch, "dimension vector sizes disagree");
    DimensionVector out(a.n());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

DimensionVector operator-(const DimensionVector& a, const DimensionVector& b) {
    if (a.n() != b.n()) fail(ErrorKind::ShapeMismatch, "dimension vector sizes disagree");
    DimensionVector out(a.n());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

DimensionVector GridRep::dimension_vector() const {
    DimensionVector d(n);
    const GridQuiver quiver(n);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
            d.at(i, j) = dims[quiver.vertex_index(i, j)];
    return d;
}

GridRep build_M(const GridQuiver& quiver, FieldSpec field) {
    GridRep rep;
    rep.n = quiver.n();
    rep.field = field;
    rep.dims.assign(quiver.vertex_count(), 0);
    for (int i = 1; i <= quiver.rows(); ++i)
        for (int j = 1; j <= quiver.cols(); ++j)
            rep.dims[quiver.vertex_index(i, j)] = i;
    for (const auto& a : quiver.arrows()) {
        if (a.horizontal())
            rep.arrow_maps.push_back(IntMatrix::identity(a.src_row));
        else
            rep.arrow_maps.push_back(IntMatrix::coordinate_inclusion(a.src_row + 1, a.src_row));
    }
    return rep;
}

GridRep zero_rep(const GridQuiver& quiver, FieldSpec field) {
    GridRep rep;
    rep.n = quiver.n();
    rep.field = field;
    rep.dims.assign(quiver.vertex_count(), 0);
    for (const auto& a : quiver.arrows()) {
        (void)a;
        rep.arrow_maps.emplace_back(0, 0);
    }
    return rep;
}

bool satisfies_relations(const GridQuiver& quiver, const GridRep& rep) {
    for (const auto& sq : quiver.squares()) {
        const int top = quiver.arrow_index(sq.row, sq.col, sq.row, sq.col + 1);
        const int right = quiver.arrow_index(sq.row, sq.col + 1, sq.row + 1, sq.col + 1);
        const int left = quiver.arrow_index(sq.row, sq.col, sq.row + 1, sq.col);
        const int bottom = quiver.arrow_index(sq.row + 1, sq.col, sq.row + 1, sq.col + 1);
        IntMatrix via_top = matmul(rep.arrow_maps[right], rep.arrow_maps[top]);
        IntMatrix via_left = matmul(rep.arrow_maps[bottom], rep.arrow_maps[left]);
        if (!rep.field.is_rational) {
            const PrimeField f(rep.field.p);
            for (auto& v : via_top.a) v = f.reduce(v);
            for (auto& v : via_left.a) v = f.reduce(v);
        }
        if (!(via_top == via_left)) return false;
    }
    return true;
}

std::int64_t euler_form(const GridQuiver& quiver, const DimensionVector& d1, const DimensionVector& d2) {
    if (d1.n() != quiver.n() || d2.n() != quiver.n())
        fail(ErrorKind::ShapeMismatch, "dimension vectors do not fit the quiver");
    std::int64_t total = 0;
    for (int i = 1; i <= quiver.rows(); ++i)
        for (int j = 1; j <= quiver.cols(); ++j)
            total += static_cast<std::int64_t>(d1.at(i, j)) * d2.at(i, j);
    for (const auto& a : quiver.arrows())
        total -= static_cast<std::int64_t>(d1.at(a.src_row, a.src_col)) * d2.at(a.dst_row, a.dst_col);
    for (const auto& sq : quiver.squares())
        total += static_cast<std::int64_t>(d1.at(sq.row, sq.col)) * d2.at(sq.row + 1, sq.col + 1);
    return total;
}

std::int64_t expected_grassmannian_dim(const GridQuiver& quiver, const DimensionVector& e) {
    if (e.n() != quiver.n()) fail(ErrorKind::ShapeMismatch, "dimension vector does not fit the quiver");
    const DimensionVector dm = DimensionVector::dim_M(quiver.n());
    for (int i = 1; i <= quiver.rows(); ++i)
        for (int j = 1; j <= quiver.cols(); ++j)
            if (e.at(i, j) < 0 || e.at(i, j) > dm.at(i, j))
                fail(ErrorKind::EntryExceedsAmbient,
                     "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [0, row index]");
    return euler_form(quiver, e, dm - e);
}

namespace {

// The morphism space {phi_v} with phi_dst A1 = A2 phi_src for every arrow is
// the kernel of one big exact linear system; its rows are indexed by (arrow,
// entry of the dst2 x src1 equation matrix) and its columns by the entries
// of all the phi_v.  Build the rows over the requested field and count rank.
template <class Field>
int morphism_space_dim(const GridQuiver& quiver, const GridRep& r1, const GridRep& r2, const Field& f,
                       const std::vector<typename Field::T>& coeff_of_int) {
    using T = typename Field::T;
    const int nv = quiver.vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + r2.dims[v] * r1.dims[v];
    const int unknowns = offset[nv];

    std::vector<std::vector<T>> rows;
    for (std::size_t ai = 0; ai < quiver.arrows().size(); ++ai) {
        const auto& ar = quiver.arrows()[ai];
        const int s = quiver.vertex_index(ar.src_row, ar.src_col);
        const int t = quiver.vertex_index(ar.dst_row, ar.dst_col);
        const IntMatrix& a1 = r1.arrow_maps[ai]; // r1.dims[t] x r1.dims[s]
        const IntMatrix& a2 = r2.arrow_maps[ai]; // r2.dims[t] x r2.dims[s]
        for (int r = 0; r < r2.dims[t]; ++r) {
            for (int c = 0; c < r1.dims[s]; ++c) {
                std::vector<T> row(static_cast<std::size_t>(unknowns), f.zero());
                bool nonzero = false;
                // (phi_t A1)(r, c): phi_t(r, k) picks up coefficient A1(k, c).
                for (int k = 0; k < r1.dims[t]; ++k) {
                    const std::int64_t cf = a1.at(k, c);
                    if (cf == 0) continue;
                    row[offset[t] + r * r1.dims[t] + k] = coeff_of_int[static_cast<std::size_t>(cf)];
                    nonzero = true;
                }
                // -(A2 phi_s)(r, c): phi_s(k, c) picks up coefficient -A2(r, k).
                for (int k = 0; k < r2.dims[s]; ++k) {
                    const std::int64_t cf = a2.at(r, k);
                    if (cf == 0) continue;
                    const int col = offset[s] + k * r1.dims[s] + c;
                    row[col] = f.sub(row[col], coeff_of_int[static_cast<std::size_t>(cf)]);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    const int rank = row_echelon_rank(rows, f);
    return unknowns - rank;
}

} // namespace

int hom_dimension(const GridRep& r1, const GridRep& r2) {
    if (r1.n != r2.n) fail(ErrorKind::ShapeMismatch, "representations live on different grids");
    if (!(r1.field == r2.field)) fail(ErrorKind::ShapeMismatch, "representations live over different fields");
    const GridQuiver quiver(r1.n);

    // Largest nonnegative integer appearing in any arrow map, for the
    // coefficient lookup table.
    std::int64_t max_entry = 1;
    for (const auto* rep : {&r1, &r2})
        for (const auto& m : rep->arrow_maps)
            for (std::int64_t v : m.a) {
                if (v < 0) fail(ErrorKind::ShapeMismatch, "arrow map entries must be nonnegative residues");
                if (v > max_entry) max_entry = v;
            }

    if (r1.field.is_rational) {
        RatFieldOps f;
        std::vector<Rat> coeff(static_cast<std::size_t>(max_entry) + 1);
        for (std::int64_t v = 0; v <= max_entry; ++v) coeff[static_cast<std::size_t>(v)] = Rat(v);
        return morphism_space_dim(quiver, r1, r2, f, coeff);
    }
    const PrimeField prime(r1.field.p);
    ModFieldOps f{&prime};
    std::vector<int> coeff(static_cast<std::size_t>(max_entry) + 1);
    for (std::int64_t v = 0; v <= max_entry; ++v) coeff[static_cast<std::size_t>(v)] = prime.reduce(v);
    return morphism_space_dim(quiver, r1, r2, f, coeff);
}

} // namespace sq
