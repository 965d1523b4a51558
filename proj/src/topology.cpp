#include "cubepeel/topology.hpp"
#include "cubepeel/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace cubepeel {

int component_count(const ConceptClass& c) {
    const auto& verts = c.concepts();
    std::unordered_map<Mask, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<char> seen(verts.size(), 0);
    int comps = 0;
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::deque<int> queue{static_cast<int>(s)};
        seen[s] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int j = 0; j < c.n(); ++j) {
                auto it = index.find(verts[static_cast<std::size_t>(u)] ^ (Mask(1) << j));
                if (it != index.end() && !seen[static_cast<std::size_t>(it->second)]) {
                    seen[static_cast<std::size_t>(it->second)] = 1;
                    queue.push_back(it->second);
                }
            }
        }
    }
    return comps;
}

BoundaryReport boundary(const ConceptClass& c) {
    auto all = enumerate_cubes(c, -1);
    int d = 0;
    for (const Cube& q : all) d = std::max(d, q.dim());
    if (d < 1)
        throw input_error("no-cubes", "boundary requires maximal cube dimension >= 1");
    auto packed = [](const Cube& q) {
        return (std::uint64_t(q.colors) << 32) | q.base;
    };
    std::unordered_set<std::uint64_t> top;
    for (const Cube& q : all)
        if (q.dim() == d) top.insert(packed(q));
    BoundaryReport report;
    report.d = d;
    for (const Cube& q : all) {
        if (q.dim() != d - 1) continue;
        int cofaces = 0;
        for (int j = 0; j < c.n(); ++j) {
            Mask bit = Mask(1) << j;
            if (q.colors & bit) continue;
            Cube up{static_cast<Mask>(q.base & ~bit), static_cast<ColorSet>(q.colors | bit)};
            if (top.contains(packed(up))) ++cofaces;
        }
        if (cofaces == 1) {
            report.boundary_cubes.push_back(q);
            report.per_colorset_counts[q.colors]++;
        }
    }
    return report;
}

std::string to_string(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        default: return "unknown";
    }
}

namespace {

using PackedCube = std::uint64_t;

PackedCube pack(Mask base, ColorSet colors) {
    return (PackedCube(colors) << 32) | base;
}

struct Complex {
    int n;
    std::vector<PackedCube> cubes;  // sorted

    bool contains(PackedCube q) const {
        return std::binary_search(cubes.begin(), cubes.end(), q);
    }
    void erase(PackedCube q) {
        auto it = std::lower_bound(cubes.begin(), cubes.end(), q);
        cubes.erase(it);
    }
    void insert(PackedCube q) {
        auto it = std::lower_bound(cubes.begin(), cubes.end(), q);
        cubes.insert(it, q);
    }
    std::string key() const {
        return std::string(reinterpret_cast<const char*>(cubes.data()),
                           cubes.size() * sizeof(PackedCube));
    }
};

struct FreePair {
    PackedCube face, coface;
};

std::vector<FreePair> free_pairs(const Complex& cx) {
    std::vector<FreePair> out;
    for (PackedCube q : cx.cubes) {
        auto base = static_cast<Mask>(q & 0xffffffffu);
        auto colors = static_cast<ColorSet>(q >> 32);
        // the unique coface, if any, has exactly one extra color
        PackedCube found = 0;
        int count = 0;
        for (int j = 0; j < cx.n && count <= 1; ++j) {
            ColorSet bit = ColorSet(1) << j;
            if (colors & bit) continue;
            PackedCube up = pack(base & ~Mask(bit), colors | bit);
            if (cx.contains(up)) {
                ++count;
                found = up;
            }
        }
        if (count != 1) continue;
        // any higher-codimension coface implies >= 2 codim-1 cofaces, so
        // counting codim-1 suffices for freeness
        out.push_back(FreePair{q, found});
    }
    std::sort(out.begin(), out.end(), [](const FreePair& x, const FreePair& y) {
        int dx = std::popcount(static_cast<ColorSet>(x.coface >> 32));
        int dy = std::popcount(static_cast<ColorSet>(y.coface >> 32));
        if (dx != dy) return dx > dy;
        return x.face < y.face;
    });
    return out;
}

bool collapse_search(Complex& cx, std::size_t& budget,
                     std::unordered_set<std::string>& dead, bool& exhausted) {
    if (cx.cubes.size() == 1 && (cx.cubes[0] >> 32) == 0) return true;
    if (budget == 0) {
        exhausted = true;
        return false;
    }
    --budget;
    if (dead.contains(cx.key())) return false;
    for (const FreePair& fp : free_pairs(cx)) {
        cx.erase(fp.face);
        cx.erase(fp.coface);
        if (collapse_search(cx, budget, dead, exhausted)) return true;
        cx.insert(fp.face);
        cx.insert(fp.coface);
        if (exhausted) return false;  // stop growing the tree, result is unknown
    }
    dead.insert(cx.key());
    return false;
}

} // namespace

TriState is_collapsible(const ConceptClass& c, std::size_t budget) {
    if (c.empty()) return TriState::no;
    if (c.size() == 1) return TriState::yes;
    if (component_count(c) > 1) return TriState::no;
    Complex cx;
    cx.n = c.n();
    for (const Cube& q : enumerate_cubes(c, -1)) cx.cubes.push_back(pack(q.base, q.colors));
    std::sort(cx.cubes.begin(), cx.cubes.end());
    std::unordered_set<std::string> dead;
    bool exhausted = false;
    if (collapse_search(cx, budget, dead, exhausted)) return TriState::yes;
    return exhausted ? TriState::unknown : TriState::no;
}

namespace {

std::string class_key(const ConceptClass& c) {
    std::string k = std::to_string(c.n()) + ":";
    k.append(reinterpret_cast<const char*>(c.concepts().data()),
             c.concepts().size() * sizeof(Mask));
    return k;
}

TriState combine(TriState a, TriState b) {
    if (a == TriState::no || b == TriState::no) return TriState::no;
    if (a == TriState::unknown || b == TriState::unknown) return TriState::unknown;
    return TriState::yes;
}

TriState strongly_contractible_rec(const ConceptClass& c, std::size_t budget, int depth,
                                   std::unordered_map<std::string, TriState>& memo) {
    std::string key = class_key(c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    TriState acc = is_collapsible(c, budget);
    if (acc != TriState::no && depth > 0) {
        for (int color = 1; color <= c.n() && acc != TriState::no; ++color) {
            ConceptClass red = reduction(c, color);
            if (red.empty()) continue;  // no edges of this color
            acc = combine(acc, strongly_contractible_rec(red, budget, depth - 1, memo));
        }
    }
    memo[key] = acc;
    return acc;
}

} // namespace

TriState is_strongly_contractible(const ConceptClass& c, std::size_t budget) {
    if (c.empty()) return TriState::no;
    int depth = 0;
    for (const Cube& q : enumerate_cubes(c, -1)) depth = std::max(depth, q.dim());
    std::unordered_map<std::string, TriState> memo;
    return strongly_contractible_rec(c, budget, depth, memo);
}

} // namespace cubepeel
