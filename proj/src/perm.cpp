#include "sq/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sq/errors.hpp"

namespace sq {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) fail(ErrorKind::NotABijection, "empty one-line form");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n)
            fail(ErrorKind::NotABijection, "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[v]) fail(ErrorKind::NotABijection, "value " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int window) {
    std::vector<int> im(static_cast<std::size_t>(window));
    for (int k = 1; k <= window; ++k) im[k - 1] = k;
    return Permutation(std::move(im));
}

int Permutation::operator()(int k) const {
    if (k < 1 || k > window())
        fail(ErrorKind::IndexOutOfRange, "argument " + std::to_string(k) + " outside window");
    return images_[k - 1];
}

int Permutation::preimage(int value) const {
    if (value < 1 || value > window())
        fail(ErrorKind::IndexOutOfRange, "value " + std::to_string(value) + " outside window");
    for (int k = 1; k <= window(); ++k)
        if (images_[k - 1] == value) return k;
    return 0; // unreachable: images_ is a bijection
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= window(); ++k)
        if (images_[k - 1] != k) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    if (window() <= 9) {
        for (int v : images_) out << v;
    } else {
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) out << ',';
            out << images_[i];
        }
    }
    return out.str();
}

SimpleTransposition::SimpleTransposition(int index) : index(index) {
    if (index < 1) fail(ErrorKind::IndexOutOfRange, "transposition index must be >= 1");
}

Permutation from_one_line(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::MalformedInput, "empty permutation text");

    std::vector<int> images;
    if (s.find(',') == std::string::npos) {
        // Contiguous digit string; only usable for windows up to 9.
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(ErrorKind::MalformedInput, "unexpected character '" + std::string(1, c) + "'");
            images.push_back(c - '0');
        }
    } else {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
                fail(ErrorKind::MalformedInput, "bad token '" + tok + "'");
            images.push_back(std::stoi(tok));
        }
        if (!s.empty() && s.back() == ',')
            fail(ErrorKind::MalformedInput, "trailing comma");
    }
    return Permutation(std::move(images));
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.window(); ++i)
        for (int j = i + 1; j <= w.window(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Permutation left_multiply_simple(SimpleTransposition s, const Permutation& w) {
    if (s.index >= w.window())
        fail(ErrorKind::IndexOutOfRange,
             "transposition index " + std::to_string(s.index) + " too large for window " + std::to_string(w.window()));
    std::vector<int> im = w.images();
    for (int& v : im) {
        if (v == s.index) v = s.index + 1;
        else if (v == s.index + 1) v = s.index;
    }
    return Permutation(std::move(im));
}

int rank_count(const Permutation& w, int p, int q) {
    int r = 0;
    for (int k = 1; k <= q; ++k)
        if (w(k) <= p) ++r;
    return r;
}

namespace {

// Relative order of the subsequence of `w` at `idx` equals `pattern`?
bool matches_at(const Permutation& w, const Permutation& pattern, const std::vector<int>& idx) {
    const int m = static_cast<int>(idx.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if ((w(idx[a]) < w(idx[b])) != (pattern(a + 1) < pattern(b + 1))) return false;
    return true;
}

bool search_pattern(const Permutation& w, const Permutation& pattern, std::vector<int>& idx, int next) {
    const int need = pattern.window() - static_cast<int>(idx.size());
    if (need == 0) return matches_at(w, pattern, idx);
    for (int k = next; k + need - 1 <= w.window(); ++k) {
        idx.push_back(k);
        if (search_pattern(w, pattern, idx, k + 1)) return true;
        idx.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
    if (pattern.window() > w.window())
        fail(ErrorKind::PatternTooLong, "pattern window exceeds permutation window");
    std::vector<int> idx;
    return search_pattern(w, pattern, idx, 1);
}

bool is_smooth(const Permutation& w) {
    static const std::vector<int> p4231 = {4, 2, 3, 1};
    static const std::vector<int> p3412 = {3, 4, 1, 2};
    if (w.window() < 4) return true;
    return !contains_pattern(w, Permutation(p4231)) && !contains_pattern(w, Permutation(p3412));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.window() != w.window())
        fail(ErrorKind::WindowMismatch, "Bruhat comparison across different windows");
    // u <= w iff u's rank function dominates w's everywhere.
    for (int p = 1; p < u.window(); ++p)
        for (int q = 1; q < u.window(); ++q)
            if (rank_count(u, p, q) < rank_count(w, p, q)) return false;
    return true;
}

} // namespace sq
