#ifndef GPTCAP_LINALG_HPP
#define GPTCAP_LINALG_HPP

#include <string>
#include <vector>

#include "gptcap/rational.hpp"

namespace gptcap {

// Coordinate vector in V or V*. Dimensions here are tiny (<= a few dozen),
// so everything is dense and exact.
using Vec = std::vector<Rational>;

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size())
        throw DimensionMismatch(std::string(where) + ": " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}

inline Rational dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dot");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    return acc;
}

inline Vec add(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, const Rational& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

// a += s*b
inline void add_scaled(Vec& a, const Rational& s, const Vec& b) {
    check_same_dim(a, b, "add_scaled");
    if (s == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] += s * b[i];
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

// Kronecker product: (a kron b)[i*|b| + j] = a[i]*b[j].
inline Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i * b.size() + j] = a[i] * b[j];
    return r;
}

// Rank of the row set via exact Gaussian elimination (destructive copy).
inline int rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            Rational f = rows[k][c] / rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) rows[k][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

} // namespace gptcap

#endif
