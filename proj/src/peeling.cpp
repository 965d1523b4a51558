#include "cubepeel/peeling.hpp"
#include "cubepeel/error.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace cubepeel {

namespace {

// residual class as a sorted vector; classes are desk scale
struct Residual {
    int n;
    std::vector<Mask> verts;  // canonical order

    bool contains(Mask m) const {
        return std::binary_search(verts.begin(), verts.end(), m, lex_less);
    }
    void erase(Mask m) {
        auto it = std::lower_bound(verts.begin(), verts.end(), m, lex_less);
        verts.erase(it);
    }
    ColorSet incident(Mask v) const {
        ColorSet s = 0;
        for (int j = 0; j < n; ++j)
            if (contains(v ^ (Mask(1) << j))) s |= Mask(1) << j;
        return s;
    }
    bool cube_present(Mask base, ColorSet colors) const {
        ColorSet sub = colors;
        for (;;) {
            if (!contains(base | sub)) return false;
            if (sub == 0) return true;
            sub = (sub - 1) & colors;
        }
    }
    std::string key() const {
        return std::string(reinterpret_cast<const char*>(verts.data()),
                           verts.size() * sizeof(Mask));
    }
};

struct Candidate {
    Mask vertex;
    ColorSet colors;
};

// corners of the residual, ordered higher dim first then canonical
std::vector<Candidate> corner_candidates(const Residual& r) {
    std::vector<Candidate> out;
    for (Mask v : r.verts) {
        ColorSet inc = r.incident(v);
        if (inc == 0) {
            if (r.verts.size() == 1) out.push_back({v, 0});
            continue;
        }
        if (r.cube_present(v & ~inc, inc)) out.push_back({v, inc});
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
        int dx = std::popcount(x.colors), dy = std::popcount(y.colors);
        if (dx != dy) return dx > dy;
        return lex_less(x.vertex, y.vertex);
    });
    return out;
}

bool peel_search(Residual& r, std::vector<PeelEvent>& events,
                 std::unordered_set<std::string>& dead) {
    if (r.verts.empty()) return true;
    if (dead.contains(r.key())) return false;
    for (const Candidate& cand : corner_candidates(r)) {
        events.push_back(PeelEvent{cand.vertex, cand.colors,
                                   std::popcount(cand.colors),
                                   static_cast<int>(events.size() + 1)});
        r.erase(cand.vertex);
        if (peel_search(r, events, dead)) return true;
        // undo
        auto it = std::lower_bound(r.verts.begin(), r.verts.end(), cand.vertex, lex_less);
        r.verts.insert(it, cand.vertex);
        events.pop_back();
    }
    dead.insert(r.key());
    return false;
}

} // namespace

CornerCheck is_corner_vertex(const ConceptClass& c, Mask v) {
    if (!c.contains(v))
        throw input_error("not-a-member", "vertex " + concept_to_string(v, c.n()) +
                                              " is not in the class");
    ColorSet inc = incident_colors(c, v);
    if (!cube_in_class(c, v & ~inc, inc)) return CornerCheck{false, {}};
    return CornerCheck{true, Cube{static_cast<Mask>(v & ~inc), inc}};
}

std::optional<PeelingSequence> corner_peel(const ConceptClass& c) {
    Residual r{c.n(), c.concepts()};
    std::vector<PeelEvent> events;
    std::unordered_set<std::string> dead;
    if (!peel_search(r, events, dead)) return std::nullopt;
    PeelingSequence seq;
    seq.mode = PeelMode::corner;
    seq.n = c.n();
    seq.events = std::move(events);
    for (const PeelEvent& e : seq.events)
        seq.max_degree = std::max(seq.max_degree, e.cube_dim);
    return seq;
}

VerifyResult verify_corner_sequence(const ConceptClass& c, const std::vector<Mask>& order) {
    Residual r{c.n(), c.concepts()};
    VerifyResult res;
    res.steps_ok = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Mask v = order[i];
        if (!r.contains(v)) {
            res.steps_ok = false;
            res.failed_step = i + 1;
            break;
        }
        ColorSet inc = r.incident(v);
        bool corner = r.cube_present(v & ~inc, inc);
        if (inc == 0 && r.verts.size() > 1) corner = false;  // no retraction
        if (!corner) {
            res.steps_ok = false;
            res.failed_step = i + 1;
            break;
        }
        r.erase(v);
    }
    res.residual = ConceptClass(c.n(), std::move(r.verts));
    return res;
}

std::optional<PeelingSequence> replay_as_corner_sequence(const ConceptClass& c,
                                                         const std::vector<Mask>& order) {
    if (order.size() != c.size()) return std::nullopt;
    Residual r{c.n(), c.concepts()};
    PeelingSequence seq;
    seq.mode = PeelMode::corner;
    seq.n = c.n();
    for (std::size_t i = 0; i < order.size(); ++i) {
        Mask v = order[i];
        if (!r.contains(v)) return std::nullopt;
        ColorSet inc = r.incident(v);
        if (!r.cube_present(v & ~inc, inc)) return std::nullopt;
        if (inc == 0 && r.verts.size() > 1) return std::nullopt;
        seq.events.push_back(PeelEvent{v, inc, std::popcount(inc),
                                       static_cast<int>(i + 1)});
        seq.max_degree = std::max(seq.max_degree, std::popcount(inc));
        r.erase(v);
    }
    return seq;
}

PeelingSequence min_peel(const ConceptClass& c) {
    Residual r{c.n(), c.concepts()};
    PeelingSequence seq;
    seq.mode = PeelMode::min;
    seq.n = c.n();
    while (!r.verts.empty()) {
        Mask best = 0;
        ColorSet best_inc = 0;
        int best_deg = -1;
        for (Mask v : r.verts) {
            ColorSet inc = r.incident(v);
            int deg = std::popcount(inc);
            if (best_deg < 0 || deg < best_deg) {
                best = v;
                best_inc = inc;
                best_deg = deg;
            }
        }
        seq.events.push_back(PeelEvent{best, best_inc, best_deg,
                                       static_cast<int>(seq.events.size() + 1)});
        seq.max_degree = std::max(seq.max_degree, best_deg);
        r.erase(best);
    }
    return seq;
}

} // namespace cubepeel
