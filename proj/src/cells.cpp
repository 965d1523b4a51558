#include "cubepeel/arrangement.hpp"
#include "cubepeel/error.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <map>

namespace cubepeel {

namespace {

Rat eval(const Hyperplane& h, const std::vector<Rat>& x) {
    return linalg::dot(h.normal, x) - h.offset;
}

// --- euclidean -----------------------------------------------------------

// columns of the inverse of the d x d matrix with rows `rows`
std::vector<std::vector<Rat>> inverse_columns(const linalg::Matrix& rows) {
    const std::size_t d = rows.size();
    std::vector<std::vector<Rat>> cols;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> e(d, Rat(0));
        e[j] = 1;
        auto col = linalg::solve_square(rows, e);
        if (!col)
            throw internal_error("singular-matrix", "vertex system became singular");
        cols.push_back(std::move(*col));
    }
    return cols;
}

struct EuclideanCandidate {
    std::vector<Rat> point;      // vertex
    std::vector<Rat> offset;     // symbolic infinitesimal direction
};

CellEnumeration cells_euclidean(const Arrangement& a) {
    const int d = a.dim, n = a.n();
    std::map<Mask, EuclideanCandidate> found;
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        linalg::Matrix rows;
        std::vector<Rat> rhs;
        for (int i : idx) {
            rows.push_back(a.planes[static_cast<std::size_t>(i)].normal);
            rhs.push_back(a.planes[static_cast<std::size_t>(i)].offset);
        }
        auto vertex = linalg::solve_square(rows, rhs);
        if (!vertex)
            throw internal_error("singular-matrix",
                                 "validated arrangement has a singular d-subset");
        auto inv_cols = inverse_columns(rows);
        // signs of the planes not through the vertex
        std::vector<int> outer_sign(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
            int s = sign(eval(a.planes[static_cast<std::size_t>(j)], *vertex));
            if (s == 0)
                throw internal_error("degenerate-vertex",
                                     "extra plane through a d-intersection point");
            outer_sign[static_cast<std::size_t>(j)] = s;
        }
        for (unsigned orthant = 0; orthant < (1u << d); ++orthant) {
            std::vector<Rat> w(static_cast<std::size_t>(d), Rat(0));
            for (int t = 0; t < d; ++t) {
                Rat c = ((orthant >> t) & 1u) ? Rat(1) : Rat(-1);
                for (int j = 0; j < d; ++j)
                    w[static_cast<std::size_t>(j)] +=
                        c * inv_cols[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            }
            Mask cell = 0;
            for (int j = 0; j < n; ++j) {
                auto pos = std::find(idx.begin(), idx.end(), j);
                int s = (pos != idx.end())
                            ? (((orthant >> (pos - idx.begin())) & 1u) ? 1 : -1)
                            : outer_sign[static_cast<std::size_t>(j)];
                if (s > 0) cell |= Mask(1) << j;
            }
            found.try_emplace(cell, EuclideanCandidate{*vertex, std::move(w)});
        }
        // advance d-subset
        int k = d;
        bool more = false;
        for (int i = k - 1; i >= 0; --i) {
            if (idx[static_cast<std::size_t>(i)] < n - k + i) {
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                more = true;
                break;
            }
        }
        if (!more) break;
    }

    std::uint64_t expected = sauer_bound(n, d);
    if (found.size() != expected)
        throw internal_error("enumeration-incomplete",
                             "cell count " + std::to_string(found.size()) +
                                 " differs from the Sauer bound " + std::to_string(expected));

    CellEnumeration out;
    std::vector<Mask> concepts;
    for (auto& [cell, cand] : found) {
        concepts.push_back(cell);
        // materialize the infinitesimal: shrink until the signs agree
        Rat eps(1);
        for (int rounds = 0;; ++rounds) {
            if (rounds > 200)
                throw internal_error("epsilon-materialization",
                                     "could not realize a cell representative");
            std::vector<Rat> p = cand.point;
            for (int j = 0; j < d; ++j)
                p[static_cast<std::size_t>(j)] += eps * cand.offset[static_cast<std::size_t>(j)];
            bool good = true;
            for (int j = 0; j < n && good; ++j) {
                int s = sign(eval(a.planes[static_cast<std::size_t>(j)], p));
                int want = ((cell >> j) & 1u) ? 1 : -1;
                if (s != want) good = false;
            }
            if (good) {
                out.map.representatives.push_back({cell, std::move(p)});
                break;
            }
            eps /= 2;
        }
    }
    out.cls = ConceptClass(n, std::move(concepts));
    if (!is_maximum(out.cls) || vc_dimension(out.cls) != d)
        throw internal_error("cells-not-maximum",
                             "enumerated cells are not a d-maximum class");
    return out;
}

// --- klein disk ----------------------------------------------------------

struct SymPoint2 {
    QPoint p0, p1, p2;  // p0 + eps p1 + eps^2 p2
};

Quad qdot(const QPoint& p, const Rat& nx, const Rat& ny) {
    return add(scale(nx, p.x), scale(ny, p.y));
}

int plane_sign(const Hyperplane& h, const SymPoint2& q) {
    Quad f0 = sub(qdot(q.p0, h.normal[0], h.normal[1]), Quad::of(h.offset));
    int s = sign(f0);
    if (s) return s;
    s = sign(qdot(q.p1, h.normal[0], h.normal[1]));
    if (s) return s;
    return sign(qdot(q.p2, h.normal[0], h.normal[1]));
}

Quad qnorm2(const QPoint& p) { return add(mul(p.x, p.x), mul(p.y, p.y)); }
Quad qinner(const QPoint& p, const QPoint& q) {
    return add(mul(p.x, q.x), mul(p.y, q.y));
}

bool strictly_inside_disk(const SymPoint2& q) {
    Quad terms[5] = {
        sub(qnorm2(q.p0), Quad::of(Rat(1))),
        scale(Rat(2), qinner(q.p0, q.p1)),
        add(qnorm2(q.p1), scale(Rat(2), qinner(q.p0, q.p2))),
        scale(Rat(2), qinner(q.p1, q.p2)),
        qnorm2(q.p2),
    };
    for (const Quad& t : terms) {
        int s = sign(t);
        if (s) return s < 0;
    }
    return false;
}

struct ChordEndpoints {
    // two ideal endpoints per chord, coordinates in Q(sqrt(disc))
    QPoint e[2];
    Rat disc;
};

ChordEndpoints chord_endpoints(const Hyperplane& h) {
    Rat nx = h.normal[0], ny = h.normal[1], o = h.offset;
    Rat q = nx * nx + ny * ny;
    Rat disc = q - o * o;  // > 0 for a secant line
    ChordEndpoints ce;
    ce.disc = disc;
    // foot of the perpendicular plus/minus the tangent direction
    ce.e[0] = QPoint{Quad(o * nx / q, -ny / q, disc), Quad(o * ny / q, nx / q, disc)};
    ce.e[1] = QPoint{Quad(o * nx / q, ny / q, disc), Quad(o * ny / q, -nx / q, disc)};
    return ce;
}

using boost::multiprecision::cpp_int;

// rational approximation of sqrt(s) with absolute error ~ 2^-bits
Rat approx_sqrt(const Rat& s, int bits) {
    cpp_int p = numerator(s), q = denominator(s);
    cpp_int scaled = p * q << (2 * bits);
    cpp_int root = sqrt(scaled);
    return Rat(root, q << bits);
}

CellEnumeration cells_klein(const Arrangement& a) {
    const int d = a.dim, n = a.n();
    struct Candidate {
        SymPoint2 sym;
        bool algebraic;  // endpoint candidates need sqrt approximation
        int chord = -1;  // owning chord for endpoint candidates
        int endpoint = 0;
        int side = 0;
        std::vector<Rat> vertex_point;  // pair-vertex candidates
        std::vector<Rat> vertex_offset;
    };
    std::map<Mask, Candidate> found;

    auto consider = [&](const Candidate& cand) {
        if (!strictly_inside_disk(cand.sym)) return;
        Mask cell = 0;
        for (int j = 0; j < n; ++j) {
            int s = plane_sign(a.planes[static_cast<std::size_t>(j)], cand.sym);
            if (s == 0) return;  // degenerate candidate, covered by others
            if (s > 0) cell |= Mask(1) << j;
        }
        found.try_emplace(cell, cand);
    };

    // crossing points nudged into each quadrant
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            linalg::Matrix rows{a.planes[static_cast<std::size_t>(i)].normal,
                                a.planes[static_cast<std::size_t>(j)].normal};
            std::vector<Rat> rhs{a.planes[static_cast<std::size_t>(i)].offset,
                                 a.planes[static_cast<std::size_t>(j)].offset};
            auto p = linalg::solve_square(rows, rhs);
            if (!p) continue;  // parallel chords
            if ((*p)[0] * (*p)[0] + (*p)[1] * (*p)[1] >= 1) continue;
            auto inv_cols = inverse_columns(rows);
            for (unsigned orthant = 0; orthant < 4; ++orthant) {
                std::vector<Rat> w(2, Rat(0));
                for (int t = 0; t < 2; ++t) {
                    Rat c = ((orthant >> t) & 1u) ? Rat(1) : Rat(-1);
                    w[0] += c * inv_cols[static_cast<std::size_t>(t)][0];
                    w[1] += c * inv_cols[static_cast<std::size_t>(t)][1];
                }
                Candidate cand;
                cand.algebraic = false;
                cand.vertex_point = *p;
                cand.vertex_offset = w;
                cand.sym = SymPoint2{QPoint{Quad::of((*p)[0]), Quad::of((*p)[1])},
                                     QPoint{Quad::of(w[0]), Quad::of(w[1])},
                                     QPoint{Quad::of(Rat(0)), Quad::of(Rat(0))}};
                consider(cand);
            }
        }

    // chord endpoints hugged along the ideal boundary on both sides
    for (int i = 0; i < n; ++i) {
        ChordEndpoints ce = chord_endpoints(a.planes[static_cast<std::size_t>(i)]);
        for (int epi = 0; epi < 2; ++epi) {
            const QPoint& e = ce.e[epi];
            QPoint tangent{scale(Rat(-1), e.y), e.x};
            QPoint inward{scale(Rat(-1), e.x), scale(Rat(-1), e.y)};
            for (int side = 0; side < 2; ++side) {
                Candidate cand;
                cand.algebraic = true;
                cand.chord = i;
                cand.endpoint = epi;
                cand.side = side;
                QPoint step = side ? QPoint{scale(Rat(-1), tangent.x), scale(Rat(-1), tangent.y)}
                                   : tangent;
                cand.sym = SymPoint2{e, step, inward};
                consider(cand);
            }
        }
    }

    std::uint64_t expected = sauer_bound(n, d);
    if (found.size() != expected)
        throw internal_error("enumeration-incomplete",
                             "cell count " + std::to_string(found.size()) +
                                 " differs from the Sauer bound " + std::to_string(expected));

    CellEnumeration out;
    std::vector<Mask> concepts;
    for (auto& [cell, cand] : found) {
        concepts.push_back(cell);
        // realize a rational interior point
        bool done = false;
        Rat eps(1, 4);
        for (int rounds = 0; rounds < 300 && !done; ++rounds) {
            std::vector<Rat> p(2);
            if (!cand.algebraic) {
                p[0] = cand.vertex_point[0] + eps * cand.vertex_offset[0];
                p[1] = cand.vertex_point[1] + eps * cand.vertex_offset[1];
            } else {
                const Hyperplane& h = a.planes[static_cast<std::size_t>(cand.chord)];
                Rat q = h.normal[0] * h.normal[0] + h.normal[1] * h.normal[1];
                Rat disc = q - h.offset * h.offset;
                Rat root = approx_sqrt(disc, 24 + 8 * rounds);
                Rat sx = (cand.endpoint == 0) ? -h.normal[1] : h.normal[1];
                Rat sy = (cand.endpoint == 0) ? h.normal[0] : -h.normal[0];
                Rat ex = (h.offset * h.normal[0] + sx * root) / q;
                Rat ey = (h.offset * h.normal[1] + sy * root) / q;
                Rat tx = -ey, ty = ex;
                if (cand.side) { tx = -tx; ty = -ty; }
                p[0] = ex * (1 - eps * eps) + eps * tx;
                p[1] = ey * (1 - eps * eps) + eps * ty;
            }
            bool good = p[0] * p[0] + p[1] * p[1] < 1;
            for (int j = 0; j < n && good; ++j) {
                int s = sign(eval(a.planes[static_cast<std::size_t>(j)], p));
                int want = ((cell >> j) & 1u) ? 1 : -1;
                if (s != want) good = false;
            }
            if (good) {
                out.map.representatives.push_back({cell, std::move(p)});
                done = true;
            } else {
                eps /= 2;
            }
        }
        if (!done)
            throw internal_error("epsilon-materialization",
                                 "could not realize a cell representative in the disk");
    }
    out.cls = ConceptClass(n, std::move(concepts));
    if (!is_maximum(out.cls) || vc_dimension(out.cls) != d)
        throw internal_error("cells-not-maximum",
                             "enumerated cells are not a d-maximum class");
    return out;
}

} // namespace

CellEnumeration cells(const Arrangement& a) {
    require_valid(a);
    if (a.n() > kMaxAmbientDim)
        throw input_error("too-large", "cell enumeration limited to " +
                                           std::to_string(kMaxAmbientDim) + " planes");
    if (a.kind == GeometryKind::euclidean) return cells_euclidean(a);
    return cells_klein(a);
}

} // namespace cubepeel
