#pragma once

#include <cstdint>
#include <vector>

#include "sq/linalg.hpp"

namespace sq {

/// The commutative grid: vertices (i, j) with rows i = 1..n+1 and columns
/// j = 1..n, a horizontal arrow (i, j) -> (i, j+1) for every i and j <= n-1,
/// a vertical arrow (i, j) -> (i+1, j) for every i <= n and j, and one
/// commutativity relation per unit square.
class GridQuiver {
public:
    struct Arrow {
        int src_row, src_col, dst_row, dst_col;
        bool horizontal() const { return src_row == dst_row; }
    };

    /// Top-left corner of a unit square; the relation equates the two paths
    /// from (row, col) to (row+1, col+1).
    struct Square {
        int row, col;
    };

    explicit GridQuiver(int n); // NTooSmall if n < 2

    int n() const { return n_; }
    int rows() const { return n_ + 1; }
    int cols() const { return n_; }
    int vertex_count() const { return rows() * cols(); }
    int vertex_index(int i, int j) const; // IndexOutOfRange
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Square>& squares() const { return squares_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    int relation_count() const { return static_cast<int>(squares_.size()); }

    /// Arrow index by endpoints, or -1 when no such arrow exists.
    int arrow_index(int src_row, int src_col, int dst_row, int dst_col) const;

private:
    int n_;
    std::vector<Arrow> arrows_;
    std::vector<Square> squares_;
};

GridQuiver build_quiver(int n);

/// One nonnegative integer per grid vertex, in the (n+1) x n layout of the
/// quiver.  Indices are 1-based to match the grid coordinates.
class DimensionVector {
public:
    explicit DimensionVector(int n); // zero-filled; NTooSmall if n < 2

    int n() const { return n_; }
    int rows() const { return n_ + 1; }
    int cols() const { return n_; }
    int at(int i, int j) const;
    int& at(int i, int j);

    /// Entry with zero padding outside the grid; the recurrences on rank
    /// tables treat row 0 and column 0 as zero.
    int at_or_zero(int i, int j) const;

    /// The dimension vector of the canonical representation: entry i at
    /// every vertex of row i.
    static DimensionVector dim_M(int n);

    friend DimensionVector operator+(const DimensionVector& a, const DimensionVector& b);
    friend DimensionVector operator-(const DimensionVector& a, const DimensionVector& b);
    friend bool operator==(const DimensionVector& a, const DimensionVector& b) = default;

private:
    int n_;
    std::vector<int> entries_; // row-major (n+1) x n
};

struct FieldSpec {
    bool is_rational = true;
    int p = 0; // prime order when !is_rational

    static FieldSpec rationals() { return {true, 0}; }
    static FieldSpec prime(int p) { return {false, p}; }
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;
};

/// A representation of the grid quiver: one vector space dimension per
/// vertex and one matrix per arrow (shape dim(target) x dim(source)).
/// Matrix entries are integers, reduced to [0, p) for prime fields.
struct GridRep {
    int n = 2;
    FieldSpec field;
    std::vector<int> dims;            // by vertex_index
    std::vector<IntMatrix> arrow_maps; // by arrow index

    DimensionVector dimension_vector() const;
};

/// The canonical representation M: k^i at every vertex of row i, identity on
/// horizontal arrows, coordinate inclusion k^i -> k^{i+1} on vertical ones.
GridRep build_M(const GridQuiver& quiver, FieldSpec field);

GridRep zero_rep(const GridQuiver& quiver, FieldSpec field);

/// Every unit square commutes?  (Representations of the grid with relations
/// must satisfy this; build_M's output always does.)
bool satisfies_relations(const GridQuiver& quiver, const GridRep& rep);

/// Euler form of the bound quiver:
///   <d1, d2> = sum_vertices d1*d2 - sum_arrows d1(src)*d2(dst)
///            + sum_squares d1(top-left)*d2(bottom-right).
std::int64_t euler_form(const GridQuiver& quiver, const DimensionVector& d1, const DimensionVector& d2);

/// Expected dimension of the subrepresentation variety of M in degree e:
/// <e, dim M - e>.  Throws EntryExceedsAmbient when e is not entrywise
/// bounded by dim M, ShapeMismatch when sizes disagree.
std::int64_t expected_grassmannian_dim(const GridQuiver& quiver, const DimensionVector& e);

/// Dimension of the space of representation morphisms r1 -> r2 (one matrix
/// per vertex commuting with every arrow map), computed as the nullity of
/// the exact linear system; rationals use fraction arithmetic, prime fields
/// use residue tables.
int hom_dimension(const GridRep& r1, const GridRep& r2);

} // namespace sq
