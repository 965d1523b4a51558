#include "cubepeel/one_inclusion.hpp"
#include "cubepeel/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace cubepeel {

OneInclusionGraph build_graph(const ConceptClass& c) {
    OneInclusionGraph g{c, {}};
    for (Mask m : c.concepts()) {
        for (int j = 0; j < c.n(); ++j) {
            Mask other = m ^ (Mask(1) << j);
            if (((m >> j) & 1u) == 0 && c.contains(other))
                g.edges.push_back(Edge{m, other, j + 1});
        }
    }
    // endpoint with bit 0 comes first in canonical order, so edges are
    // already (a < b); sort the list itself for determinism
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& x, const Edge& y) {
        if (x.a != y.a) return lex_less(x.a, y.a);
        if (x.b != y.b) return lex_less(x.b, y.b);
        return x.color < y.color;
    });
    return g;
}

bool cube_in_class(const ConceptClass& c, Mask base, ColorSet colors) {
    if (base & colors) return false;  // base must sit at the cube minimum
    ColorSet sub = colors;
    // iterate all submasks of colors, including 0
    for (;;) {
        if (!c.contains(base | sub)) return false;
        if (sub == 0) break;
        sub = (sub - 1) & colors;
    }
    return true;
}

std::vector<Cube> enumerate_cubes(const ConceptClass& c, int dim) {
    std::vector<Cube> level;
    for (Mask m : c.concepts()) level.push_back(Cube{m, 0});
    std::vector<Cube> out;
    if (dim <= 0) out = level;
    int k = 0;
    while (!level.empty() && (dim < 0 || k < dim)) {
        std::vector<Cube> next;
        for (const Cube& q : level) {
            // grow only with colors above the current maximum to avoid dups
            int first = q.colors ? (32 - std::countl_zero(q.colors)) : 0;
            for (int j = first; j < c.n(); ++j) {
                Mask bit = Mask(1) << j;
                if (q.base & bit) continue;
                // two parallel k-cubes make a (k+1)-cube
                if (cube_in_class(c, q.base | bit, q.colors))
                    next.push_back(Cube{q.base, q.colors | bit});
            }
        }
        ++k;
        if (dim < 0)
            out.insert(out.end(), next.begin(), next.end());
        else if (k == dim)
            out = next;
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Cube& x, const Cube& y) {
        if (x.colors != y.colors) return x.colors < y.colors;
        return lex_less(x.base, y.base);
    });
    return out;
}

bool is_d_complete_collection(const ConceptClass& c, int d) {
    if (d < 0 || d > c.n()) return false;
    std::vector<Cube> cubes = enumerate_cubes(c, d);
    std::vector<char> seen(std::size_t(1) << c.n(), 0);
    std::size_t distinct = 0;
    for (const Cube& q : cubes)
        if (!seen[q.colors]) { seen[q.colors] = 1; ++distinct; }
    std::uint64_t want = 1;
    for (int i = 0; i < d; ++i) want = want * std::uint64_t(c.n() - i) / std::uint64_t(i + 1);
    return distinct == want;
}

ColorSet incident_colors(const ConceptClass& c, Mask v) {
    if (!c.contains(v))
        throw input_error("not-a-member", "vertex " + concept_to_string(v, c.n()) +
                                              " is not in the class");
    ColorSet s = 0;
    for (int j = 0; j < c.n(); ++j)
        if (c.contains(v ^ (Mask(1) << j))) s |= Mask(1) << j;
    return s;
}

bool is_shortest_path_closed(const ConceptClass& c) {
    const auto& verts = c.concepts();
    std::unordered_map<Mask, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<int> dist(verts.size());
    for (std::size_t src = 0; src < verts.size(); ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::deque<int> queue{static_cast<int>(src)};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int j = 0; j < c.n(); ++j) {
                auto it = index.find(verts[u] ^ (Mask(1) << j));
                if (it != index.end() && dist[it->second] < 0) {
                    dist[it->second] = dist[u] + 1;
                    queue.push_back(it->second);
                }
            }
        }
        for (std::size_t t = 0; t < verts.size(); ++t) {
            int hamming = std::popcount(verts[src] ^ verts[t]);
            if (dist[t] != hamming) return false;
        }
    }
    return true;
}

} // namespace cubepeel
