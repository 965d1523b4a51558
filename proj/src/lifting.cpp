#include "cubepeel/lifting.hpp"
#include "cubepeel/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace cubepeel {

using BitClass = MaximumClassEnumerator::BitClass;

std::size_t BitClass::count() const {
    std::size_t total = 0;
    for (auto word : w) total += std::popcount(word);
    return total;
}

bool BitClass::subset_of(const BitClass& o, int words) const {
    for (int i = 0; i < words; ++i)
        if (w[static_cast<std::size_t>(i)] & ~o.w[static_cast<std::size_t>(i)]) return false;
    return true;
}

namespace {

struct BitClassHash {
    std::size_t operator()(const BitClass& b) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto word : b.w) {
            h ^= word;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// all d-cubes of C, as (base, colors) with base bits 0 on colors
std::vector<std::pair<unsigned, unsigned>> bit_cubes(const BitClass& c, int n, int d) {
    std::vector<std::pair<unsigned, unsigned>> out;
    if (d == 0) {
        for (unsigned v = 0; v < (1u << n); ++v)
            if (c.test(v)) out.push_back({v, 0});
        return out;
    }
    unsigned colors = (1u << d) - 1;
    unsigned limit = 1u << n;
    while (colors < limit) {
        for (unsigned base = 0; base < limit; ++base) {
            if (base & colors) continue;
            bool full = true;
            unsigned sub = colors;
            for (;;) {
                if (!c.test(base | sub)) { full = false; break; }
                if (sub == 0) break;
                sub = (sub - 1) & colors;
            }
            if (full) out.push_back({base, colors});
        }
        unsigned lo = colors & (~colors + 1);
        unsigned lz = colors + lo;
        colors = lz | (((colors ^ lz) / lo) >> 2);
    }
    return out;
}

// component id per cube under Cp-avoiding connectivity
std::vector<int> cube_components(const BitClass& c, const BitClass& cp, int n,
                                 const std::vector<std::pair<unsigned, unsigned>>& cubes,
                                 int* component_count) {
    UnionFind uf(1 << n);
    // edges of G(C \ Cp)
    for (unsigned v = 0; v < (1u << n); ++v) {
        if (!c.test(v) || cp.test(v)) continue;
        for (int j = 0; j < n; ++j) {
            unsigned u = v ^ (1u << j);
            if (u > v && c.test(u) && !cp.test(u)) uf.unite(v, u);
        }
    }
    // a cube ties all of its non-Cp vertices together
    for (const auto& [base, colors] : cubes) {
        int anchor = -1;
        unsigned sub = colors;
        for (;;) {
            unsigned v = base | sub;
            if (!cp.test(v)) {
                if (anchor < 0)
                    anchor = static_cast<int>(v);
                else
                    uf.unite(anchor, static_cast<int>(v));
            }
            if (sub == 0) break;
            sub = (sub - 1) & colors;
        }
    }
    std::vector<int> roots;
    std::vector<int> comp(cubes.size(), -1);
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        unsigned sub = cubes[i].second;
        int root = -1;
        for (;;) {
            unsigned v = cubes[i].first | sub;
            if (!cp.test(v)) { root = uf.find(static_cast<int>(v)); break; }
            if (sub == 0) break;
            sub = (sub - 1) & cubes[i].second;
        }
        if (root < 0)
            throw internal_error("cube-inside-reduction",
                                 "d-cube contained in the (d-1)-maximum subclass");
        auto it = std::find(roots.begin(), roots.end(), root);
        if (it == roots.end()) {
            roots.push_back(root);
            comp[i] = static_cast<int>(roots.size()) - 1;
        } else {
            comp[i] = static_cast<int>(it - roots.begin());
        }
    }
    *component_count = static_cast<int>(roots.size());
    return comp;
}

BitClass to_bitclass(const ConceptClass& c) {
    BitClass b;
    for (Mask m : c.concepts()) b.set(m);
    return b;
}

ConceptClass to_concept_class(const BitClass& b, int n) {
    std::vector<Mask> verts;
    for (unsigned v = 0; v < (1u << n); ++v)
        if (b.test(v)) verts.push_back(v);
    return ConceptClass(n, std::move(verts));
}

} // namespace

std::vector<std::vector<Cube>> connected_components_mod(const ConceptClass& c,
                                                        const ConceptClass& cp) {
    if (c.n() > MaximumClassEnumerator::kMaxN)
        throw input_error("too-large", "component analysis limited to n <= 8");
    if (!is_maximum(c))
        throw input_error("not-maximum", "class is not maximum");
    int d = vc_dimension(c);
    if (d == 0) {
        if (!cp.empty()) throw input_error("bad-subclass", "0-maximum class admits only an empty subclass");
    } else {
        if (cp.empty() || !is_maximum(cp) || vc_dimension(cp) != d - 1)
            throw input_error("bad-subclass", "subclass is not (d-1)-maximum");
    }
    BitClass cb = to_bitclass(c), cpb = to_bitclass(cp);
    for (Mask m : cp.concepts())
        if (!c.contains(m)) throw input_error("bad-subclass", "subclass not contained in class");
    if (cp.size() >= c.size())
        throw input_error("bad-subclass", "subclass must be proper");
    auto cubes = bit_cubes(cb, c.n(), d);
    int k = 0;
    auto comp = cube_components(cb, cpb, c.n(), cubes, &k);
    std::vector<std::vector<Cube>> out(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < cubes.size(); ++i)
        out[static_cast<std::size_t>(comp[i])].push_back(
            Cube{static_cast<Mask>(cubes[i].first), static_cast<ColorSet>(cubes[i].second)});
    return out;
}

const std::vector<BitClass>& MaximumClassEnumerator::enumerate(int n, int d) {
    if (n < 0 || d < 0 || d > n)
        throw input_error("bad-argument", "construct requires 0 <= d <= n");
    if (n > kMaxN)
        throw input_error("too-large",
                          "construct limited to n <= " + std::to_string(kMaxN));
    auto key = std::make_pair(n, d);
    auto found = memo_.find(key);
    if (found != memo_.end()) return found->second;

    std::vector<BitClass> result;
    if (d == 0) {
        for (unsigned v = 0; v < (1u << n); ++v) {
            BitClass b;
            b.set(v);
            result.push_back(b);
        }
    } else if (d == n) {
        BitClass b;
        for (unsigned v = 0; v < (1u << n); ++v) b.set(v);
        result.push_back(b);
    } else {
        const auto& projections = enumerate(n - 1, d);
        const auto& reductions = enumerate(n - 1, d - 1);
        const int words = word_count(n - 1);
        std::unordered_set<BitClass, BitClassHash> seen;
        for (const BitClass& proj : projections) {
            auto cubes = bit_cubes(proj, n - 1, d);
            for (const BitClass& red : reductions) {
                if (!red.subset_of(proj, words) || red == proj) continue;
                int k = 0;
                auto comp = cube_components(proj, red, n - 1, cubes, &k);
                if (k > 24)
                    throw internal_error("too-many-components",
                                         "component count exceeds lifting limit");
                // vertex sets per component
                std::vector<BitClass> verts(static_cast<std::size_t>(k));
                for (std::size_t i = 0; i < cubes.size(); ++i) {
                    unsigned sub = cubes[i].second;
                    for (;;) {
                        verts[static_cast<std::size_t>(comp[i])].set(cubes[i].first | sub);
                        if (sub == 0) break;
                        sub = (sub - 1) & cubes[i].second;
                    }
                }
                for (unsigned levels = 0; levels < (1u << k); ++levels) {
                    BitClass lifted;
                    for (unsigned v = 0; v < (1u << (n - 1)); ++v) {
                        if (red.test(v)) {
                            lifted.set(v);
                            lifted.set(v | (1u << (n - 1)));
                        }
                    }
                    for (int q = 0; q < k; ++q) {
                        unsigned level = (levels >> q) & 1u;
                        for (unsigned v = 0; v < (1u << (n - 1)); ++v)
                            if (verts[static_cast<std::size_t>(q)].test(v))
                                lifted.set(v | (level << (n - 1)));
                    }
                    seen.insert(lifted);
                }
            }
        }
        result.assign(seen.begin(), seen.end());
    }
    std::sort(result.begin(), result.end());
    return memo_.emplace(key, std::move(result)).first->second;
}

void MaximumClassEnumerator::release(int n, int d) {
    memo_.erase(std::make_pair(n, d));
}

std::vector<ConceptClass> MaximumClassEnumerator::construct(int n, int d) {
    const auto& bits = enumerate(n, d);
    std::vector<ConceptClass> out;
    out.reserve(bits.size());
    for (const BitClass& b : bits) out.push_back(to_concept_class(b, n));
    return out;
}

std::vector<ConceptClass> construct_maximum_classes(int n, int d) {
    MaximumClassEnumerator e;
    return e.construct(n, d);
}

namespace {

Mask insert_bit(Mask m, int pos /*0-based*/, unsigned level) {
    Mask low = m & ((Mask(1) << pos) - 1);
    Mask high = m >> pos;
    return low | (Mask(level) << pos) | (high << (pos + 1));
}

} // namespace

ConceptClass shift(const ConceptClass& c, int color) {
    if (color < 1 || color > c.n())
        throw input_error("bad-color", "color outside 1..n");
    if (!is_maximum(c))
        throw input_error("not-maximum", "shift requires a maximum class");
    int d = vc_dimension(c);
    int pos = color - 1;
    Mask bit = Mask(1) << pos;
    if (d == 0) {
        // lone component, moved to level 0
        return ConceptClass(c.n(), {static_cast<Mask>(c.concepts()[0] & ~bit)});
    }
    if (d == c.n()) return c;  // full cube
    ColorSet keep = ((Mask(1) << c.n()) - 1) & ~bit;
    ConceptClass proj = project(c, keep);
    ConceptClass red = reduction(c, color);
    std::vector<Mask> out;
    for (Mask m : red.concepts()) {
        out.push_back(insert_bit(m, pos, 0));
        out.push_back(insert_bit(m, pos, 1));
    }
    auto comps = connected_components_mod(proj, red);
    for (const auto& comp : comps) {
        for (const Cube& q : comp) {
            ColorSet sub = q.colors;
            for (;;) {
                Mask v = q.base | sub;
                if (!red.contains(v)) out.push_back(insert_bit(v, pos, 0));
                if (sub == 0) break;
                sub = (sub - 1) & q.colors;
            }
        }
    }
    ConceptClass shifted(c.n(), std::move(out));
    if (shifted.size() != c.size() || !is_maximum(shifted))
        throw internal_error("shift-broken", "shift changed cardinality or maximality");
    return shifted;
}

} // namespace cubepeel
