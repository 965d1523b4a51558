#ifndef CUBEPEEL_SRC_LINALG_HPP
#define CUBEPEEL_SRC_LINALG_HPP

#include "cubepeel/rational.hpp"

#include <optional>
#include <vector>

namespace cubepeel::linalg {

using Matrix = std::vector<std::vector<Rat>>;

inline int rank(Matrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    int r = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(r) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = static_cast<std::size_t>(r); i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[static_cast<std::size_t>(r)][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

// Unique solution of a square system, nullopt when singular.
inline std::optional<std::vector<Rat>> solve_square(Matrix a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// rank [A|b] == rank A
inline bool consistent(const Matrix& a, const std::vector<Rat>& b) {
    Matrix aug = a;
    for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    return rank(aug) == rank(a);
}

// Basis of the orthogonal complement of a nonzero vector.
inline std::vector<std::vector<Rat>> orthogonal_basis(const std::vector<Rat>& u) {
    const std::size_t d = u.size();
    std::size_t p = d;
    for (std::size_t i = 0; i < d; ++i)
        if (u[i] != 0) { p = i; break; }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t j = 0; j < d; ++j) {
        if (j == p) continue;
        std::vector<Rat> v(d, Rat(0));
        v[j] = 1;
        v[p] = -u[j] / u[p];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace cubepeel::linalg

#endif
