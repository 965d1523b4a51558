#include "cubepeel/concept_class.hpp"
#include "cubepeel/error.hpp"

#include <algorithm>
#include <bit>

namespace cubepeel {

bool lex_less(Mask a, Mask b) {
    Mask diff = a ^ b;
    if (diff == 0) return false;
    int j = std::countr_zero(diff);  // first coordinate where they differ
    return ((a >> j) & 1u) == 0;
}

int popcount_mask(Mask m) { return std::popcount(m); }

ColorSet colorset_from_indices(const std::vector<int>& indices, int n) {
    ColorSet s = 0;
    for (int i : indices) {
        if (i < 1 || i > n)
            throw input_error("bad-color", "color index " + std::to_string(i) +
                                               " outside 1.." + std::to_string(n));
        s |= Mask(1) << (i - 1);
    }
    return s;
}

std::vector<int> colorset_indices(ColorSet s) {
    std::vector<int> out;
    while (s) {
        int c = std::countr_zero(s);
        out.push_back(c + 1);
        s &= s - 1;
    }
    return out;
}

std::string concept_to_string(Mask m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((m >> j) & 1u) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

Mask concept_from_string(const std::string& bits, int n) {
    if (static_cast<int>(bits.size()) != n)
        throw input_error("bad-concept", "concept '" + bits + "' does not have " +
                                             std::to_string(n) + " bits");
    Mask m = 0;
    for (int j = 0; j < n; ++j) {
        char ch = bits[static_cast<std::size_t>(j)];
        if (ch == '1')
            m |= Mask(1) << j;
        else if (ch != '0')
            throw input_error("bad-concept", "concept '" + bits + "' has non-binary digits");
    }
    return m;
}

ConceptClass::ConceptClass(int n, std::vector<Mask> concepts)
    : n_(n), concepts_(std::move(concepts)) {
    if (n < 0 || n > kMaxAmbientDim)
        throw input_error("bad-dimension",
                          "ambient dimension must be in 0.." + std::to_string(kMaxAmbientDim));
    for (Mask m : concepts_)
        if (n < 32 && (m >> n) != 0)
            throw input_error("bad-concept", "concept mask exceeds ambient dimension");
    std::sort(concepts_.begin(), concepts_.end(), lex_less);
    concepts_.erase(std::unique(concepts_.begin(), concepts_.end()), concepts_.end());
}

bool ConceptClass::contains(Mask m) const {
    return std::binary_search(concepts_.begin(), concepts_.end(), m, lex_less);
}

ConceptClass full_cube(int n) {
    std::vector<Mask> all;
    all.reserve(std::size_t(1) << n);
    for (Mask m = 0; m < (Mask(1) << n); ++m) all.push_back(m);
    return ConceptClass(n, std::move(all));
}

bool shatters(const ConceptClass& c, ColorSet subset) {
    int k = std::popcount(subset);
    if (c.size() < (std::size_t(1) << k)) return false;
    std::uint64_t seen_lo = 0;
    std::vector<bool> seen;
    bool small = k <= 6;
    if (!small) seen.assign(std::size_t(1) << k, false);
    std::size_t found = 0;
    const std::size_t want = std::size_t(1) << k;
    for (Mask m : c.concepts()) {
        // gather the subset's bits
        Mask pattern = 0;
        int out = 0;
        ColorSet s = subset;
        while (s) {
            int j = std::countr_zero(s);
            pattern |= ((m >> j) & 1u) << out;
            ++out;
            s &= s - 1;
        }
        if (small) {
            std::uint64_t bit = std::uint64_t(1) << pattern;
            if (!(seen_lo & bit)) {
                seen_lo |= bit;
                if (++found == want) return true;
            }
        } else {
            if (!seen[pattern]) {
                seen[pattern] = true;
                if (++found == want) return true;
            }
        }
    }
    return false;
}

namespace {

// any k-subset of [n] shattered?
bool some_subset_shattered(const ConceptClass& c, int k) {
    int n = c.n();
    if (k > n) return false;
    if (c.size() < (std::size_t(1) << k)) return false;
    if (k == 0) return !c.empty();
    Mask sub = (Mask(1) << k) - 1;
    Mask limit = Mask(1) << n;
    while (sub < limit) {
        if (shatters(c, sub)) return true;
        // Gosper's hack: next mask with k bits
        Mask lo = sub & (~sub + 1);
        Mask lz = sub + lo;
        sub = lz | (((sub ^ lz) / lo) >> 2);
        if (lo == 0) break;
    }
    return false;
}

} // namespace

int vc_dimension(const ConceptClass& c) {
    if (c.empty())
        throw input_error("empty-class", "empty class has no VC dimension");
    int d = 0;
    for (int k = 1; k <= c.n(); ++k) {
        if (!some_subset_shattered(c, k)) break;
        d = k;
    }
    return d;
}

std::uint64_t sauer_bound(int n, int d) {
    if (n < 0 || d < 0 || d > n)
        throw input_error("bad-argument", "sauer_bound requires 0 <= d <= n");
    if (n >= 63)
        throw input_error("bad-argument", "sauer_bound limited to n < 63");
    std::uint64_t total = 0, binom = 1;
    for (int i = 0; i <= d; ++i) {
        total += binom;
        binom = binom * std::uint64_t(n - i) / std::uint64_t(i + 1);
    }
    return total;
}

ConceptClass project(const ConceptClass& c, ColorSet keep) {
    if (c.n() < 32 && (keep >> c.n()) != 0)
        throw input_error("bad-color", "projection set exceeds ambient dimension");
    int nn = std::popcount(keep);
    std::vector<Mask> out;
    out.reserve(c.size());
    for (Mask m : c.concepts()) {
        Mask packed = 0;
        int pos = 0;
        ColorSet s = keep;
        while (s) {
            int j = std::countr_zero(s);
            packed |= ((m >> j) & 1u) << pos;
            ++pos;
            s &= s - 1;
        }
        out.push_back(packed);
    }
    return ConceptClass(nn, std::move(out));
}

ConceptClass reduction(const ConceptClass& c, int color) {
    if (color < 1 || color > c.n())
        throw input_error("bad-color", "color outside 1..n");
    Mask bit = Mask(1) << (color - 1);
    std::vector<Mask> incident;
    for (Mask m : c.concepts())
        if (c.contains(m ^ bit)) incident.push_back(m);
    ColorSet keep = ((c.n() >= 32 ? ~Mask(0) : (Mask(1) << c.n()) - 1)) & ~bit;
    return project(ConceptClass(c.n(), std::move(incident)), keep);
}

ConceptClass tail(const ConceptClass& c, int color) {
    if (color < 1 || color > c.n())
        throw input_error("bad-color", "color outside 1..n");
    Mask bit = Mask(1) << (color - 1);
    std::vector<Mask> out;
    for (Mask m : c.concepts())
        if (!c.contains(m ^ bit)) out.push_back(m);
    return ConceptClass(c.n(), std::move(out));
}

bool is_maximum(const ConceptClass& c) {
    if (c.empty())
        throw input_error("empty-class", "empty class cannot be maximum");
    return c.size() == sauer_bound(c.n(), vc_dimension(c));
}

bool is_maximum_all_projections(const ConceptClass& c) {
    if (!is_maximum(c)) return false;
    for (Mask keep = 1; keep < (Mask(1) << c.n()); ++keep) {
        ConceptClass p = project(c, keep);
        if (p.size() != sauer_bound(std::popcount(keep), vc_dimension(p)))
            return false;
    }
    return true;
}

bool is_maximal(const ConceptClass& c) {
    if (c.empty())
        throw input_error("empty-class", "empty class cannot be maximal");
    int d = vc_dimension(c);
    if (d == c.n()) return c.size() == (std::size_t(1) << c.n());
    for (Mask v = 0; v < (Mask(1) << c.n()); ++v) {
        if (c.contains(v)) continue;
        std::vector<Mask> grown(c.concepts());
        grown.push_back(v);
        ConceptClass g(c.n(), std::move(grown));
        if (!some_subset_shattered(g, d + 1)) return false;
    }
    return true;
}

} // namespace cubepeel
