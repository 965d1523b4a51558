#include "cubepeel/arrangement.hpp"
#include "cubepeel/error.hpp"
#include "linalg.hpp"

#include <algorithm>

namespace cubepeel {

namespace {

std::string subset_string(const std::vector<int>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ids[i]);
    }
    return s + "}";
}

// next k-subset of {0..n-1} in lexicographic order; false when done
bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

ValidationReport fail(std::vector<int> ids, std::string reason) {
    ValidationReport r;
    r.ok = false;
    for (int& i : ids) ++i;  // report 1-based
    r.witness = std::move(ids);
    r.reason = std::move(reason);
    return r;
}

ValidationReport validate_euclidean(const Arrangement& a) {
    int d = a.dim, n = a.n();
    if (d < 1) return fail({}, "euclidean arrangement needs dimension >= 1");
    if (n < d) return fail({}, "simple arrangement needs at least d planes");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a.planes[static_cast<std::size_t>(i)].normal.size()) != d)
            return fail({i}, "normal length differs from the ambient dimension");
        bool zero = true;
        for (const Rat& x : a.planes[static_cast<std::size_t>(i)].normal)
            if (x != 0) { zero = false; break; }
        if (zero) return fail({i}, "zero normal");
    }
    for (int k = 2; k <= std::min(d + 1, n); ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            linalg::Matrix m;
            std::vector<Rat> b;
            for (int i : idx) {
                m.push_back(a.planes[static_cast<std::size_t>(i)].normal);
                b.push_back(a.planes[static_cast<std::size_t>(i)].offset);
            }
            if (k <= d) {
                if (linalg::rank(m) != k)
                    return fail(idx, std::to_string(k) +
                                         " planes do not meet in a " +
                                         std::to_string(d - k) + "-flat");
            } else {
                if (linalg::consistent(m, b))
                    return fail(idx, std::to_string(k) + " planes share a point");
            }
        } while (next_subset(idx, n));
    }
    return ValidationReport{};
}

ValidationReport validate_klein(const Arrangement& a) {
    int d = a.dim, n = a.n();
    if (d < 1 || d > 2)
        return fail({}, "klein_disk supports arrangement parameter d in {1,2}");
    if (n < 1 || n < d) return fail({}, "not enough chords");
    for (int i = 0; i < n; ++i) {
        const Hyperplane& h = a.planes[static_cast<std::size_t>(i)];
        if (h.normal.size() != 2) return fail({i}, "klein_disk chords live in the plane");
        Rat q = h.normal[0] * h.normal[0] + h.normal[1] * h.normal[1];
        if (q == 0) return fail({i}, "zero normal");
        if (h.offset * h.offset >= q)
            return fail({i}, "line misses the open unit disk");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            linalg::Matrix m{a.planes[static_cast<std::size_t>(i)].normal,
                             a.planes[static_cast<std::size_t>(j)].normal};
            std::vector<Rat> b{a.planes[static_cast<std::size_t>(i)].offset,
                               a.planes[static_cast<std::size_t>(j)].offset};
            if (linalg::rank(m) < 2) {
                if (linalg::consistent(m, b)) return fail({i, j}, "coincident lines");
                if (d == 2) return fail({i, j}, "chords must cross inside the disk");
                continue;  // parallel, disjoint in the disk
            }
            auto p = linalg::solve_square(m, b);
            Rat norm2 = (*p)[0] * (*p)[0] + (*p)[1] * (*p)[1];
            if (d == 1 && norm2 <= 1)
                return fail({i, j}, "chords meet inside the closed disk");
            if (d == 2 && norm2 >= 1)
                return fail({i, j}, "chords must cross strictly inside the disk");
        }
    }
    if (d == 2) {
        // a common triple point would be a pairwise crossing, hence inside
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    linalg::Matrix m{a.planes[static_cast<std::size_t>(i)].normal,
                                     a.planes[static_cast<std::size_t>(j)].normal,
                                     a.planes[static_cast<std::size_t>(k)].normal};
                    std::vector<Rat> b{a.planes[static_cast<std::size_t>(i)].offset,
                                       a.planes[static_cast<std::size_t>(j)].offset,
                                       a.planes[static_cast<std::size_t>(k)].offset};
                    if (linalg::consistent(m, b))
                        return fail({i, j, k}, "three chords share a point");
                }
    }
    return ValidationReport{};
}

} // namespace

ValidationReport validate(const Arrangement& a) {
    if (a.kind == GeometryKind::euclidean) return validate_euclidean(a);
    return validate_klein(a);
}

void require_valid(const Arrangement& a) {
    ValidationReport r = validate(a);
    if (!r.ok)
        throw input_error("invalid-arrangement", r.reason, subset_string(r.witness));
}

const std::vector<Rat>* CellMap::find(Mask concept_mask) const {
    for (const auto& [m, point] : representatives)
        if (m == concept_mask) return &point;
    return nullptr;
}

std::vector<Rat> sweep_direction(int dim, int attempt) {
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
                                 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
                                 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
                                 211, 223, 227, 229, 233, 239, 241, 251, 257, 263,
                                 269, 271, 277, 281, 283, 293, 307, 311};
    constexpr int pool = static_cast<int>(sizeof(primes) / sizeof(primes[0]));
    if (attempt < 0 || attempt >= pool)
        throw internal_error("direction-pool-exhausted",
                             "no generic sweep direction found in the pool");
    std::vector<Rat> u(static_cast<std::size_t>(dim));
    Rat q(primes[attempt]);
    Rat v(1);
    for (int i = 0; i < dim; ++i) {
        u[static_cast<std::size_t>(i)] = v;
        v *= q;
    }
    return u;
}

} // namespace cubepeel
