#ifndef CUBEPEEL_CONCEPT_CLASS_HPP
#define CUBEPEEL_CONCEPT_CLASS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cubepeel {

// A concept is a vertex of {0,1}^n packed into a mask: bit c (0-based)
// holds coordinate x_{c+1}.  All I/O and public color arguments are
// 1-based, matching the x_1..x_n convention.
using Mask = std::uint32_t;
// Set of coordinate indices ("colors"): bit c = color c+1.
using ColorSet = std::uint32_t;

constexpr int kMaxAmbientDim = 20;

// Canonical order: lexicographic on the bit string x_1 x_2 ... x_n.
bool lex_less(Mask a, Mask b);

int popcount_mask(Mask m);

// 1-based index list <-> ColorSet.
ColorSet colorset_from_indices(const std::vector<int>& indices, int n);
std::vector<int> colorset_indices(ColorSet s);

std::string concept_to_string(Mask m, int n);
Mask concept_from_string(const std::string& bits, int n);

class ConceptClass {
public:
    ConceptClass() = default;
    ConceptClass(int n, std::vector<Mask> concepts);  // sorts, dedupes, validates

    int n() const { return n_; }
    const std::vector<Mask>& concepts() const { return concepts_; }
    std::size_t size() const { return concepts_.size(); }
    bool empty() const { return concepts_.empty(); }
    bool contains(Mask m) const;

    bool operator==(const ConceptClass& other) const = default;

private:
    int n_ = 0;
    std::vector<Mask> concepts_;
};

ConceptClass full_cube(int n);

// Largest k such that some k-subset of coordinates is shattered.
// Exhaustive smallest-first search with early exit; singleton -> 0.
int vc_dimension(const ConceptClass& c);

// True iff the projection of c onto the colors of `subset` is the full cube.
bool shatters(const ConceptClass& c, ColorSet subset);

// sum_{i=0}^{d} binomial(n, i)
std::uint64_t sauer_bound(int n, int d);

// Delete all coordinates outside `keep` (relative order preserved).
ConceptClass project(const ConceptClass& c, ColorSet keep);

// C^i: projection onto [n]\{i} of the concepts incident to an i-colored edge.
ConceptClass reduction(const ConceptClass& c, int color);

// Concepts with no incident i-colored edge, kept in ambient dimension n.
ConceptClass tail(const ConceptClass& c, int color);

// Cardinality test against the Sauer bound (sufficient for finite classes).
bool is_maximum(const ConceptClass& c);
// Checks the bound with equality on every coordinate subset as well.
bool is_maximum_all_projections(const ConceptClass& c);

// True iff adding any missing vertex raises the VC dimension.
bool is_maximal(const ConceptClass& c);

} // namespace cubepeel

#endif
