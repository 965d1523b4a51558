#ifndef CUBEPEEL_COMPRESSION_HPP
#define CUBEPEEL_COMPRESSION_HPP

#include "cubepeel/peeling.hpp"

#include <optional>
#include <vector>

namespace cubepeel {

// Injective concept -> color-set map; entries sorted by concept.
class RepresentationMap {
public:
    RepresentationMap() = default;
    RepresentationMap(int n, std::vector<std::pair<Mask, ColorSet>> entries);

    int n() const { return n_; }
    const std::vector<std::pair<Mask, ColorSet>>& entries() const { return entries_; }
    std::optional<ColorSet> lookup(Mask concept_mask) const;
    std::optional<Mask> inverse(ColorSet rep) const;
    int scheme_size() const;  // max |rep|

private:
    int n_ = 0;
    std::vector<std::pair<Mask, ColorSet>> entries_;          // by concept
    std::vector<std::pair<ColorSet, Mask>> by_rep_;           // by representative
};

// r(v_t) = incident colors of v_t when it was peeled.  The sequence must
// exhaust the class.
RepresentationMap representation_from_peeling(const ConceptClass& c,
                                              const PeelingSequence& seq);

struct ClashWitness {
    bool ok = true;
    Mask first = 0, second = 0;  // clashing pair when !ok
};

// Non-clashing: any two concepts differ somewhere on r(c) | r(c').
ClashWitness check_non_clashing(const ConceptClass& c, const RepresentationMap& r);

// Sample: labeled coordinates, bits restricted to `indices`.
struct LabeledSample {
    ColorSet indices = 0;
    Mask bits = 0;  // bits & ~indices == 0
};

LabeledSample sample_of(Mask concept_mask, ColorSet indices);

// The unique representative S subset of the sample's indices, |S| <= scheme
// size, whose concept agrees with the sample.  Errors: no concept of the
// class matches the sample at all; or the hit is missing/ambiguous, which
// means the map is broken.
ColorSet compress(const LabeledSample& sample, const ConceptClass& c,
                  const RepresentationMap& r);

// r^{-1}(S); S must be in the image.
Mask reconstruct(ColorSet rep, const RepresentationMap& r);

struct OrientationReport {
    bool acyclic = true;
    std::vector<Edge> anomalies;       // neither or both endpoints own the color
    std::vector<Mask> cycle;           // a directed cycle when !acyclic
};

// Orient every edge away from the endpoint whose representative contains
// the edge's color, then test for directed cycles.
OrientationReport is_acyclic(const ConceptClass& c, const RepresentationMap& r);

} // namespace cubepeel

#endif
