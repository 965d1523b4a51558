#ifndef CUBEPEEL_ARRANGEMENT_HPP
#define CUBEPEEL_ARRANGEMENT_HPP

#include "cubepeel/concept_class.hpp"
#include "cubepeel/peeling.hpp"
#include "cubepeel/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubepeel {

// Oriented hyperplane normal.x = offset; the positive side normal.x > offset
// gives concept bit 1.  Plane order defines colors 1..n.
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset;
};

enum class GeometryKind { euclidean, klein_disk };

// euclidean: `dim` is the ambient dimension d and every d-subset of planes
// must meet in a point, every (d+1)-subset in nothing.
// klein_disk: ambient space is the open unit disk (k = 2); `dim` is the
// arrangement parameter d of the class: d-subsets must meet strictly
// inside the disk, (d+1)-subsets must miss it.
struct Arrangement {
    int dim = 0;
    GeometryKind kind = GeometryKind::euclidean;
    std::vector<Hyperplane> planes;

    int n() const { return static_cast<int>(planes.size()); }
    int ambient() const { return kind == GeometryKind::euclidean ? dim : 2; }
};

struct ValidationReport {
    bool ok = true;
    std::vector<int> witness;  // offending plane ids (1-based)
    std::string reason;
};

ValidationReport validate(const Arrangement& a);
void require_valid(const Arrangement& a);  // throws input_error with witness

// Interior representative points, aligned with the enumerated class.
struct CellMap {
    std::vector<std::pair<Mask, std::vector<Rat>>> representatives;
    const std::vector<Rat>* find(Mask concept_mask) const;
};

struct CellEnumeration {
    ConceptClass cls;
    CellMap map;
};

// Every nonempty cell's sign vector.  Euclidean cells come from the
// d-intersection points nudged by a symbolic infinitesimal into each
// orthant; Klein cells add candidates hugging the ideal boundary next to
// each chord endpoint.  The result must be maximum of the expected
// dimension and meet the Sauer-bound cardinality, or enumeration is
// reported incomplete.
CellEnumeration cells(const Arrangement& a);

// Documented deterministic direction pool: attempt k in dimension m yields
// (1, q, q^2, ..., q^{m-1}) with q the (k+1)-st prime.  A seed shifts the
// starting attempt.
std::vector<Rat> sweep_direction(int dim, int attempt);

// Corner-peeling by a generic sweep.  Euclidean: d-intersection points in
// projection order, each peeling the vanishing simplex cell, then the
// residual class is peeled by recursing on the restriction to a hyperplane
// past every intersection point; dimensions never increase.  Klein: cells
// leave in order of the sweeping chord's last contact (chord endpoints,
// crossing points, or the disk's extreme point), and dimensions may
// interleave.  Every sequence is replayed through the corner rules before
// being returned.
PeelingSequence sweep(const Arrangement& a,
                      const std::optional<std::vector<Rat>>& direction = std::nullopt,
                      int seed = 0);
PeelingSequence sweep_klein(const Arrangement& a,
                            const std::optional<std::vector<Rat>>& direction = std::nullopt,
                            int seed = 0);

} // namespace cubepeel

#endif
