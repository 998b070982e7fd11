#pragma once

#include <string>
#include <vector>

namespace sq {

/// A permutation of {1, ..., window} in one-line notation: images()[k-1] is
/// the image of k.  The window (the n+1 of the ambient flag variety) is part
/// of the value; operations on mismatched windows throw WindowMismatch.
class Permutation {
public:
    /// Validates that `images` is a bijection of {1, ..., images.size()};
    /// throws NotABijection otherwise.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int window);

    int window() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const;      // image of k, 1-based; IndexOutOfRange
    int preimage(int value) const;    // w^{-1}(value), 1-based; IndexOutOfRange
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    /// One-line text: contiguous digits when window <= 9 ("43251"),
    /// comma-separated otherwise ("10,3,2,...").
    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

/// Index of a simple transposition s_i (swapping the values i and i+1 when
/// acting on the left).  The upper bound depends on the window it is applied
/// to and is checked at the point of use.
struct SimpleTransposition {
    explicit SimpleTransposition(int index);
    int index;
};

/// Parses one-line notation.  Two accepted formats: a contiguous digit
/// string ("43251", window <= 9) or comma-separated values ("4,3,2,5,1").
/// Throws MalformedInput / NotABijection.
Permutation from_one_line(const std::string& text);

/// Coxeter length = number of inversions.
int length(const Permutation& w);

/// s_i * w: swaps the *values* i and i+1 in the one-line form.
Permutation left_multiply_simple(SimpleTransposition s, const Permutation& w);

/// #{k <= q : w(k) <= p}, the rank function of the permutation matrix.
int rank_count(const Permutation& w, int p, int q);

/// True iff some subsequence of w's one-line form has the same relative
/// order as `pattern`.  Throws PatternTooLong when pattern exceeds w.
bool contains_pattern(const Permutation& w, const Permutation& pattern);

/// Smoothness of the Schubert variety X_w: w avoids both 4231 and 3412.
bool is_smooth(const Permutation& w);

/// Bruhat order, decided by entrywise comparison of rank functions:
/// u <= w iff rank_count(u, p, q) >= rank_count(w, p, q) for all p, q.
bool bruhat_leq(const Permutation& u, const Permutation& w);

} // namespace sq
