#ifndef CUBEPEEL_ONE_INCLUSION_HPP
#define CUBEPEEL_ONE_INCLUSION_HPP

#include "cubepeel/concept_class.hpp"

#include <vector>

namespace cubepeel {

// Edge of the one-inclusion graph; endpoints differ exactly in `color`
// (1-based) and a precedes b canonically.
struct Edge {
    Mask a, b;
    int color;
    bool operator==(const Edge&) const = default;
};

struct OneInclusionGraph {
    ConceptClass cls;
    std::vector<Edge> edges;
};

OneInclusionGraph build_graph(const ConceptClass& c);

// Subcube of a class: base has 0 on every color of the cube, and all
// 2^dim vertices obtained by toggling colors lie in the class.
struct Cube {
    Mask base;
    ColorSet colors;
    int dim() const { return popcount_mask(colors); }
    bool operator==(const Cube&) const = default;
};

bool cube_in_class(const ConceptClass& c, Mask base, ColorSet colors);

// All subcubes of dimension `dim` fully contained in c (dim = -1: all
// dimensions, vertices included).  Grown incrementally color by color.
std::vector<Cube> enumerate_cubes(const ConceptClass& c, int dim);

// True iff for every d-subset of colors some d-cube in c has exactly
// those colors.
bool is_d_complete_collection(const ConceptClass& c, int d);

// Colors of the edges incident to v; throws if v is not in the class.
ColorSet incident_colors(const ConceptClass& c, Mask v);

// Graph distance equals Hamming distance for every pair (BFS per source).
bool is_shortest_path_closed(const ConceptClass& c);

} // namespace cubepeel

#endif
