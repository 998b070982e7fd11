#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sq/errors.hpp"

namespace sq {

/// Exact rational with overflow-checked arithmetic.  Numerator/denominator
/// are kept coprime with den > 0, so equality is structural.  The grids this
/// library eliminates have entries in {-1, 0, 1} and stay tiny, but every
/// product goes through a 128-bit intermediate and is range-checked anyway.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
};

/// Arithmetic in F_p for a small prime p, precomputed as residue tables.
/// All values live in [0, p).
class PrimeField {
public:
    explicit PrimeField(int p);

    int p() const { return p_; }
    int reduce(std::int64_t v) const {
        int r = static_cast<int>(v % p_);
        return r < 0 ? r + p_ : r;
    }
    int add(int a, int b) const { return add_[a * p_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * p_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

private:
    int p_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Dense integer matrix; doubles as the arrow-map container for grid
/// representations (entries reduced mod p when the field is finite).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a; // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int k);
    /// The coordinate inclusion k^c -> k^r (r >= c): identity block on top of
    /// nothing -- e_j goes to e_j.
    static IntMatrix coordinate_inclusion(int r, int c);

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) = default;
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);

// --- Row reduction over an abstract field -------------------------------
//
// Field must provide: type T; T zero(); bool is_zero(T); T neg(T);
// T mul(T, T); T sub(T, T); T inv(T).  Rows are dense vectors of T.
// Returns the rank; `m` is left in (non-reduced) echelon form.

template <class Field>
int row_echelon_rank(std::vector<std::vector<typename Field::T>>& m, const Field& f) {
    using T = typename Field::T;
    if (m.empty()) return 0;
    const int ncols = static_cast<int>(m[0].size());
    const int nrows = static_cast<int>(m.size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (!f.is_zero(m[r][col])) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const T inv_p = f.inv(m[rank][col]);
        for (int r = rank + 1; r < nrows; ++r) {
            if (f.is_zero(m[r][col])) continue;
            const T factor = f.mul(m[r][col], inv_p);
            for (int c = col; c < ncols; ++c) {
                if (f.is_zero(m[rank][c])) continue;
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

struct RatFieldOps {
    using T = Rat;
    T zero() const { return Rat(0); }
    bool is_zero(const T& v) const { return v.is_zero(); }
    T neg(const T& v) const { return Rat(0) - v; }
    T mul(const T& a, const T& b) const { return a * b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T inv(const T& v) const { return Rat(1) / v; }
};

struct ModFieldOps {
    const PrimeField* f;
    using T = int;
    T zero() const { return 0; }
    bool is_zero(T v) const { return v == 0; }
    T neg(T v) const { return f->neg(v); }
    T mul(T a, T b) const { return f->mul(a, b); }
    T sub(T a, T b) const { return f->sub(a, b); }
    T inv(T v) const { return f->inv(v); }
};

} // namespace sq
