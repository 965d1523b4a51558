#include "cubepeel/compression.hpp"
#include "cubepeel/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cubepeel {

RepresentationMap::RepresentationMap(int n, std::vector<std::pair<Mask, ColorSet>> entries)
    : n_(n), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].first == entries_[i - 1].first)
            throw input_error("duplicate-concept", "representation map has a repeated concept");
    by_rep_.reserve(entries_.size());
    for (const auto& [concept_mask, rep] : entries_) by_rep_.push_back({rep, concept_mask});
    std::sort(by_rep_.begin(), by_rep_.end());
    for (std::size_t i = 1; i < by_rep_.size(); ++i)
        if (by_rep_[i].first == by_rep_[i - 1].first)
            throw input_error("not-injective", "representation map reuses a color set");
}

std::optional<ColorSet> RepresentationMap::lookup(Mask concept_mask) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), concept_mask,
        [](const auto& e, Mask m) { return lex_less(e.first, m); });
    if (it == entries_.end() || it->first != concept_mask) return std::nullopt;
    return it->second;
}

std::optional<Mask> RepresentationMap::inverse(ColorSet rep) const {
    auto it = std::lower_bound(by_rep_.begin(), by_rep_.end(), rep,
                               [](const auto& e, ColorSet s) { return e.first < s; });
    if (it == by_rep_.end() || it->first != rep) return std::nullopt;
    return it->second;
}

int RepresentationMap::scheme_size() const {
    int d = 0;
    for (const auto& [concept_mask, rep] : entries_)
        d = std::max(d, std::popcount(rep));
    return d;
}

RepresentationMap representation_from_peeling(const ConceptClass& c,
                                              const PeelingSequence& seq) {
    if (seq.events.size() != c.size())
        throw input_error("incomplete-sequence",
                          "peeling sequence does not exhaust the class");
    std::vector<std::pair<Mask, ColorSet>> entries;
    entries.reserve(seq.events.size());
    for (const PeelEvent& e : seq.events) {
        if (!c.contains(e.vertex))
            throw input_error("incomplete-sequence", "peeled vertex outside the class");
        entries.push_back({e.vertex, e.representative});
    }
    return RepresentationMap(c.n(), std::move(entries));
}

namespace {

ColorSet require(const RepresentationMap& r, Mask m, int n) {
    auto rep = r.lookup(m);
    if (!rep)
        throw input_error("partial-map", "representation map misses concept " +
                                             concept_to_string(m, n));
    return *rep;
}

} // namespace

ClashWitness check_non_clashing(const ConceptClass& c, const RepresentationMap& r) {
    const auto& verts = c.concepts();
    std::vector<ColorSet> reps(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) reps[i] = require(r, verts[i], c.n());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            ColorSet joint = reps[i] | reps[j];
            if (((verts[i] ^ verts[j]) & joint) == 0)
                return ClashWitness{false, verts[i], verts[j]};
        }
    return ClashWitness{};
}

LabeledSample sample_of(Mask concept_mask, ColorSet indices) {
    return LabeledSample{indices, static_cast<Mask>(concept_mask & indices)};
}

ColorSet compress(const LabeledSample& sample, const ConceptClass& c,
                  const RepresentationMap& r) {
    if (sample.bits & ~sample.indices)
        throw input_error("bad-sample", "sample bits outside its index set");
    bool realizable = false;
    for (Mask m : c.concepts())
        if (((m ^ sample.bits) & sample.indices) == 0) { realizable = true; break; }
    if (!realizable)
        throw input_error("no-consistent-concept",
                          "no concept of the class is consistent with the sample");
    int d = r.scheme_size();
    ColorSet hit = 0;
    int hits = 0;
    ColorSet sub = sample.indices;
    for (;;) {
        if (std::popcount(sub) <= d) {
            auto m = r.inverse(sub);
            if (m && ((*m ^ sample.bits) & sample.indices) == 0) {
                ++hits;
                hit = sub;
                if (hits > 1)
                    throw verification_error("scheme-invalid",
                                             "sample has multiple consistent representatives");
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & sample.indices;
    }
    if (hits == 0)
        throw verification_error("scheme-invalid",
                                 "sample has no consistent representative");
    return hit;
}

Mask reconstruct(ColorSet rep, const RepresentationMap& r) {
    auto m = r.inverse(rep);
    if (!m)
        throw input_error("not-in-image", "color set is not a representative");
    return *m;
}

OrientationReport is_acyclic(const ConceptClass& c, const RepresentationMap& r) {
    OrientationReport report;
    OneInclusionGraph g = build_graph(c);
    std::unordered_map<Mask, int> index;
    const auto& verts = c.concepts();
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(verts.size());
    for (const Edge& e : g.edges) {
        ColorSet bit = ColorSet(1) << (e.color - 1);
        bool in_a = (require(r, e.a, c.n()) & bit) != 0;
        bool in_b = (require(r, e.b, c.n()) & bit) != 0;
        if (in_a == in_b) {
            report.anomalies.push_back(e);
            continue;
        }
        if (in_a)
            adj[static_cast<std::size_t>(index[e.a])].push_back(index[e.b]);
        else
            adj[static_cast<std::size_t>(index[e.b])].push_back(index[e.a]);
    }
    // iterative DFS cycle detection, colors: 0 new, 1 on stack, 2 done
    std::vector<int> state(verts.size(), 0), parent(verts.size(), -1);
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (state[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s), 0}};
        state[s] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[static_cast<std::size_t>(u)].size()) {
                int v = adj[static_cast<std::size_t>(u)][next++];
                if (state[v] == 1) {
                    // unwind the cycle
                    report.acyclic = false;
                    report.cycle.push_back(verts[static_cast<std::size_t>(v)]);
                    for (int w = u; w != v && w >= 0; w = parent[static_cast<std::size_t>(w)])
                        report.cycle.push_back(verts[static_cast<std::size_t>(w)]);
                    std::reverse(report.cycle.begin(), report.cycle.end());
                    return report;
                }
                if (state[v] == 0) {
                    state[v] = 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    stack.push_back({v, 0});
                }
            } else {
                state[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
            }
        }
    }
    return report;
}

} // namespace cubepeel
