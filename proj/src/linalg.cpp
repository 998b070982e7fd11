#include "sq/linalg.hpp"

#include <cstdlib>

namespace sq {

namespace {

std::int64_t checked_narrow(__int128 v, const char* ctx) {
    if (v > INT64_MAX || v < INT64_MIN)
        fail(ErrorKind::ShapeMismatch, std::string("rational overflow in ") + ctx);
    return static_cast<std::int64_t>(v);
}

} // namespace

Rat::Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) fail(ErrorKind::ShapeMismatch, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rat operator+(const Rat& a, const Rat& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return Rat(checked_narrow(n, "add"), checked_narrow(d, "add"));
}

Rat operator-(const Rat& a, const Rat& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return Rat(checked_narrow(n, "sub"), checked_narrow(d, "sub"));
}

Rat operator*(const Rat& a, const Rat& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.num;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return Rat(checked_narrow(n, "mul"), checked_narrow(d, "mul"));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(ErrorKind::ShapeMismatch, "rational division by zero");
    const __int128 n = static_cast<__int128>(a.num) * b.den;
    const __int128 d = static_cast<__int128>(a.den) * b.num;
    return Rat(checked_narrow(n, "div"), checked_narrow(d, "div"));
}

PrimeField::PrimeField(int p) : p_(p) {
    if (p < 2) fail(ErrorKind::MalformedInput, "field order must be a prime >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) fail(ErrorKind::MalformedInput, "field order must be prime");
    add_.resize(static_cast<std::size_t>(p) * p);
    mul_.resize(static_cast<std::size_t>(p) * p);
    neg_.resize(p);
    inv_.assign(p, 0);
    for (int a = 0; a < p; ++a) {
        neg_[a] = (p - a) % p;
        for (int b = 0; b < p; ++b) {
            add_[a * p + b] = (a + b) % p;
            mul_[a * p + b] = (a * b) % p;
        }
    }
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (mul_[a * p + b] == 1) { inv_[a] = b; break; }
}

int PrimeField::inv(int a) const {
    if (a == 0) fail(ErrorKind::ShapeMismatch, "inverse of zero in prime field");
    return inv_[a];
}

IntMatrix IntMatrix::identity(int k) {
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::coordinate_inclusion(int r, int c) {
    IntMatrix m(r, c);
    for (int i = 0; i < c && i < r; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) fail(ErrorKind::ShapeMismatch, "matmul shapes disagree");
    IntMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const std::int64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

} // namespace sq
