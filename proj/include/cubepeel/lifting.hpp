#ifndef CUBEPEEL_LIFTING_HPP
#define CUBEPEEL_LIFTING_HPP

#include "cubepeel/one_inclusion.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace cubepeel {

// Partition of C's d-cubes into Cp-avoiding connected components: two
// cubes fall together when a path in the one-inclusion graph joins them
// without touching Cp (taken as the transitive closure over shared
// component vertices).  Requires Cp a proper subset of C, C d-maximum and
// Cp (d-1)-maximum.
std::vector<std::vector<Cube>> connected_components_mod(const ConceptClass& c,
                                                        const ConceptClass& cp);

// Enumerates all d-maximum classes in the n-cube by recursive lifting over
// compatible (projection, reduction) pairs; results are memoized per
// (n, d) and returned in canonical order.  The lifted coordinate is always
// appended as coordinate n, which pins the output bit-exactly.
class MaximumClassEnumerator {
public:
    // packed vertex set of {0,1}^n for n <= 10
    struct BitClass {
        std::array<std::uint64_t, 16> w{};
        bool test(unsigned v) const { return (w[v >> 6] >> (v & 63)) & 1; }
        void set(unsigned v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
        std::size_t count() const;
        bool subset_of(const BitClass& o, int words) const;
        bool operator==(const BitClass&) const = default;
        bool operator<(const BitClass&) const = default;
    };

    static constexpr int kMaxN = 10;
    static int word_count(int n) { return n <= 6 ? 1 : (1 << (n - 6)); }

    const std::vector<BitClass>& enumerate(int n, int d);
    std::vector<ConceptClass> construct(int n, int d);
    void release(int n, int d);  // drop one memo entry (memory control)

private:
    std::map<std::pair<int, int>, std::vector<BitClass>> memo_;
};

// Convenience wrapper around a one-shot enumerator.
std::vector<ConceptClass> construct_maximum_classes(int n, int d);

// Splits C along the lifted reduction of color i and moves every lifted
// component down to level x_i = 0.  Preserves cardinality, VC dimension
// and maximality; downward-closed classes are fixed points.
ConceptClass shift(const ConceptClass& c, int color);

} // namespace cubepeel

#endif
