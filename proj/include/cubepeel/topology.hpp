#ifndef CUBEPEEL_TOPOLOGY_HPP
#define CUBEPEEL_TOPOLOGY_HPP

#include "cubepeel/one_inclusion.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cubepeel {

int component_count(const ConceptClass& c);

struct BoundaryReport {
    int d = 0;  // maximal cube dimension of the class
    std::vector<Cube> boundary_cubes;                // (d-1)-cubes with one coface
    std::map<ColorSet, int> per_colorset_counts;     // by (d-1)-color set
};

// All (d-1)-subcubes that are the face of exactly one d-cube.
BoundaryReport boundary(const ConceptClass& c);

enum class TriState { yes, no, unknown };
std::string to_string(TriState t);

// Free-face collapsing with a backtracking budget.  yes: reduced to a
// point; no: certified (disconnected, or exhaustive search failed within
// the budget); unknown: budget ran out.  Collapsibility stands in for
// contractibility, which has no general decision procedure.
TriState is_collapsible(const ConceptClass& c, std::size_t budget = 200000);

// Collapsible, and so is every reduction along every chain of distinct
// colors (no dominates, unknown propagates).
TriState is_strongly_contractible(const ConceptClass& c, std::size_t budget = 200000);

} // namespace cubepeel

#endif
