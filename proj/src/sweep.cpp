#include "cubepeel/arrangement.hpp"
#include "cubepeel/error.hpp"
#include "linalg.hpp"

#include <algorithm>

namespace cubepeel {

namespace {

constexpr int kAttempts = 48;

struct GeomEvent {
    Mask cell;
    ColorSet colors;
};

// one-dimensional base case: peel the intervals left to right, then the
// final ray as the single 0-event
std::vector<GeomEvent> sweep_line_1d(const std::vector<Hyperplane>& planes) {
    const int n = static_cast<int>(planes.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return planes[static_cast<std::size_t>(x)].offset / planes[static_cast<std::size_t>(x)].normal[0] <
               planes[static_cast<std::size_t>(y)].offset / planes[static_cast<std::size_t>(y)].normal[0];
    });
    std::vector<GeomEvent> events;
    for (int i : order) {
        Rat p = planes[static_cast<std::size_t>(i)].offset / planes[static_cast<std::size_t>(i)].normal[0];
        Mask cell = 0;
        for (int j = 0; j < n; ++j) {
            int s;
            if (j == i) {
                s = -sign(planes[static_cast<std::size_t>(j)].normal[0]);
            } else {
                s = sign(planes[static_cast<std::size_t>(j)].normal[0] * p -
                         planes[static_cast<std::size_t>(j)].offset);
                if (s == 0)
                    throw internal_error("degenerate-points", "coincident points on the line");
            }
            if (s > 0) cell |= Mask(1) << j;
        }
        events.push_back(GeomEvent{cell, ColorSet(1) << i});
    }
    Mask last = 0;
    for (int j = 0; j < n; ++j)
        if (planes[static_cast<std::size_t>(j)].normal[0] > 0) last |= Mask(1) << j;
    events.push_back(GeomEvent{last, 0});
    return events;
}

std::vector<GeomEvent> sweep_level(int m, const std::vector<Hyperplane>& planes,
                                   const std::optional<std::vector<Rat>>& forced_dir,
                                   int seed) {
    if (m == 1) return sweep_line_1d(planes);
    const int n = static_cast<int>(planes.size());
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Rat> u = (attempt == 0 && forced_dir) ? *forced_dir
                                                          : sweep_direction(m, seed + attempt);
        if (static_cast<int>(u.size()) != m)
            throw input_error("bad-direction", "direction length differs from the dimension");
        bool generic = true;
        for (int i = 0; i < n && generic; ++i)
            if (linalg::dot(planes[static_cast<std::size_t>(i)].normal, u) == 0) generic = false;
        if (!generic) continue;

        // all m-intersection points, projected on u
        struct Vertex {
            std::vector<int> planes_through;
            std::vector<Rat> point;
            Rat value;
        };
        std::vector<Vertex> vertices;
        std::vector<int> idx(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            linalg::Matrix rows;
            std::vector<Rat> rhs;
            for (int i : idx) {
                rows.push_back(planes[static_cast<std::size_t>(i)].normal);
                rhs.push_back(planes[static_cast<std::size_t>(i)].offset);
            }
            auto p = linalg::solve_square(rows, rhs);
            if (!p)
                throw internal_error("singular-matrix",
                                     "validated arrangement has a singular subset");
            vertices.push_back(Vertex{idx, *p, linalg::dot(u, *p)});
            int k = m;
            bool more = false;
            for (int i = k - 1; i >= 0; --i) {
                if (idx[static_cast<std::size_t>(i)] < n - k + i) {
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k; ++j)
                        idx[static_cast<std::size_t>(j)] =
                            idx[static_cast<std::size_t>(j - 1)] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
        std::sort(vertices.begin(), vertices.end(),
                  [](const Vertex& x, const Vertex& y) { return x.value < y.value; });
        for (std::size_t i = 1; i < vertices.size() && generic; ++i)
            if (vertices[i].value == vertices[i - 1].value) generic = false;
        if (!generic) continue;

        std::vector<GeomEvent> events;
        for (const Vertex& v : vertices) {
            Mask cell = 0;
            ColorSet colors = 0;
            for (int i : v.planes_through) colors |= ColorSet(1) << i;
            for (int j = 0; j < n; ++j) {
                int s;
                if (colors & (ColorSet(1) << j)) {
                    // sign just behind the crossing point
                    s = -sign(linalg::dot(planes[static_cast<std::size_t>(j)].normal, u));
                } else {
                    s = sign(linalg::dot(planes[static_cast<std::size_t>(j)].normal, v.point) -
                             planes[static_cast<std::size_t>(j)].offset);
                    if (s == 0)
                        throw internal_error("degenerate-vertex",
                                             "extra plane through an intersection point");
                }
                if (s > 0) cell |= Mask(1) << j;
            }
            events.push_back(GeomEvent{cell, colors});
        }

        // residual class: restriction to a hyperplane past every vertex
        Rat t_far = vertices.back().value + 1;
        Rat uu = linalg::dot(u, u);
        std::vector<Rat> x0(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) x0[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] * t_far / uu;
        auto basis = linalg::orthogonal_basis(u);
        std::vector<Hyperplane> restricted;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Hyperplane h;
            for (const auto& bvec : basis)
                h.normal.push_back(linalg::dot(planes[static_cast<std::size_t>(i)].normal, bvec));
            h.offset = planes[static_cast<std::size_t>(i)].offset -
                       linalg::dot(planes[static_cast<std::size_t>(i)].normal, x0);
            bool zero = true;
            for (const Rat& c : h.normal)
                if (c != 0) zero = false;
            if (zero) ok = false;
            restricted.push_back(std::move(h));
        }
        if (!ok) continue;
        Arrangement sub;
        sub.dim = m - 1;
        sub.kind = GeometryKind::euclidean;
        sub.planes = restricted;
        if (!validate(sub).ok) continue;

        auto rest = sweep_level(m - 1, restricted, std::nullopt, seed);
        events.insert(events.end(), rest.begin(), rest.end());
        return events;
    }
    throw input_error("genericity",
                      "no generic sweep direction found after retries");
}

PeelingSequence finish_sweep(const ConceptClass& cls, const std::vector<GeomEvent>& events) {
    if (events.size() != cls.size())
        throw internal_error("sweep-incomplete", "sweep produced " +
                                                     std::to_string(events.size()) +
                                                     " events for " +
                                                     std::to_string(cls.size()) + " cells");
    std::vector<Mask> order;
    order.reserve(events.size());
    for (const GeomEvent& e : events) order.push_back(e.cell);
    auto seq = replay_as_corner_sequence(cls, order);
    if (!seq)
        throw internal_error("sweep-not-corner",
                             "sweep order failed corner-sequence replay");
    for (std::size_t i = 0; i < events.size(); ++i)
        if (seq->events[i].representative != events[i].colors)
            throw internal_error("sweep-witness-mismatch",
                                 "replayed representative differs from the swept cube");
    return *seq;
}

} // namespace

PeelingSequence sweep(const Arrangement& a,
                      const std::optional<std::vector<Rat>>& direction, int seed) {
    if (a.kind != GeometryKind::euclidean)
        throw input_error("wrong-kind", "sweep expects a euclidean arrangement");
    CellEnumeration enumeration = cells(a);
    auto events = sweep_level(a.dim, a.planes, direction, seed);
    return finish_sweep(enumeration.cls, events);
}

PeelingSequence sweep_klein(const Arrangement& a,
                            const std::optional<std::vector<Rat>>& direction, int seed) {
    if (a.kind != GeometryKind::klein_disk)
        throw input_error("wrong-kind", "sweep_klein expects a klein_disk arrangement");
    CellEnumeration enumeration = cells(a);
    const int n = a.n();
    const auto& cls = enumeration.cls;

    // direction-independent candidate geometry
    struct Candidate {
        QPoint point;                // quadratic or rational coordinates
        std::vector<int> plane_sign; // -1/0/+1 per plane
    };
    std::vector<Candidate> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            linalg::Matrix rows{a.planes[static_cast<std::size_t>(i)].normal,
                                a.planes[static_cast<std::size_t>(j)].normal};
            std::vector<Rat> rhs{a.planes[static_cast<std::size_t>(i)].offset,
                                 a.planes[static_cast<std::size_t>(j)].offset};
            auto p = linalg::solve_square(rows, rhs);
            if (!p) continue;
            if ((*p)[0] * (*p)[0] + (*p)[1] * (*p)[1] >= 1) continue;  // outside the disk
            Candidate cand;
            cand.point = QPoint{Quad::of((*p)[0]), Quad::of((*p)[1])};
            for (int k = 0; k < n; ++k) {
                const Hyperplane& h = a.planes[static_cast<std::size_t>(k)];
                cand.plane_sign.push_back(
                    sign(Quad(linalg::dot(h.normal, *p) - h.offset, 0, 0)));
            }
            candidates.push_back(std::move(cand));
        }
    for (int i = 0; i < n; ++i) {
        const Hyperplane& hi = a.planes[static_cast<std::size_t>(i)];
        Rat q = hi.normal[0] * hi.normal[0] + hi.normal[1] * hi.normal[1];
        Rat disc = q - hi.offset * hi.offset;
        for (int epi = 0; epi < 2; ++epi) {
            Rat sx = (epi == 0) ? -hi.normal[1] : hi.normal[1];
            Rat sy = (epi == 0) ? hi.normal[0] : -hi.normal[0];
            Candidate cand;
            cand.point = QPoint{Quad(hi.offset * hi.normal[0] / q, sx / q, disc),
                                Quad(hi.offset * hi.normal[1] / q, sy / q, disc)};
            for (int k = 0; k < n; ++k) {
                const Hyperplane& h = a.planes[static_cast<std::size_t>(k)];
                Quad f = sub(add(scale(h.normal[0], cand.point.x),
                                 scale(h.normal[1], cand.point.y)),
                             Quad::of(h.offset));
                cand.plane_sign.push_back(sign(f));
            }
            candidates.push_back(std::move(cand));
        }
    }

    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Rat> u = (attempt == 0 && direction) ? *direction
                                                         : sweep_direction(2, seed + attempt);
        if (u.size() != 2)
            throw input_error("bad-direction", "klein sweep directions live in the plane");
        Rat uu = u[0] * u[0] + u[1] * u[1];
        // the disk's extreme point u/|u| must avoid every chord
        std::vector<int> top_sign(static_cast<std::size_t>(n));
        bool generic = true;
        for (int k = 0; k < n && generic; ++k) {
            const Hyperplane& h = a.planes[static_cast<std::size_t>(k)];
            int s = sign_with_root(linalg::dot(h.normal, u), -h.offset, uu);
            if (s == 0) generic = false;
            top_sign[static_cast<std::size_t>(k)] = s;
        }
        if (!generic) continue;

        std::vector<Quad> values;
        values.reserve(candidates.size());
        for (const Candidate& cand : candidates)
            values.push_back(add(scale(u[0], cand.point.x), scale(u[1], cand.point.y)));
        Quad top_value(0, 1, uu);

        // last-contact value per cell
        struct Timed {
            Mask cell;
            Quad when;
        };
        std::vector<Timed> timed;
        for (Mask cell : cls.concepts()) {
            const Quad* best = nullptr;
            for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
                bool member = true;
                for (int k = 0; k < n && member; ++k) {
                    int want = ((cell >> k) & 1u) ? 1 : -1;
                    int s = candidates[ci].plane_sign[static_cast<std::size_t>(k)];
                    if (s != 0 && s != want) member = false;
                }
                if (member && (!best || compare(values[ci], *best) > 0)) best = &values[ci];
            }
            bool top_member = true;
            for (int k = 0; k < n && top_member; ++k) {
                int want = ((cell >> k) & 1u) ? 1 : -1;
                if (top_sign[static_cast<std::size_t>(k)] != want) top_member = false;
            }
            if (top_member && (!best || compare(top_value, *best) > 0)) best = &top_value;
            if (!best)
                throw internal_error("no-support-point",
                                     "cell has no extreme candidate on the sweep");
            timed.push_back(Timed{cell, *best});
        }
        std::sort(timed.begin(), timed.end(), [](const Timed& x, const Timed& y) {
            return compare(x.when, y.when) < 0;
        });
        for (std::size_t i = 1; i < timed.size() && generic; ++i)
            if (compare(timed[i].when, timed[i - 1].when) == 0) generic = false;
        if (!generic) continue;

        std::vector<Mask> order;
        order.reserve(timed.size());
        for (const Timed& t : timed) order.push_back(t.cell);
        auto seq = replay_as_corner_sequence(cls, order);
        if (!seq)
            throw internal_error("sweep-not-corner",
                                 "klein sweep order failed corner-sequence replay");
        return *seq;
    }
    throw input_error("genericity", "no generic sweep direction found after retries");
}

} // namespace cubepeel
