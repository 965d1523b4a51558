#ifndef CUBEPEEL_FIXTURES_HPP
#define CUBEPEEL_FIXTURES_HPP

#include "cubepeel/compression.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubepeel {

struct Fixture {
    std::string name;
    std::string description;
    ConceptClass cls;
    std::optional<RepresentationMap> rep;
};

// Bundled classes, bit order x1..xn left to right:
//  table-euclidean            11-concept 2-maximum class in {0,1}^4 realizable
//                             by four generic lines in the plane
//  future-maximal-1           VC-2 maximal class: four squares sharing 0000
//                             plus an isolated vertex; labeled scheme attached
//  future-maximal-2           VC-2 maximal class: three squares sharing 0000
//                             with three pendant edges; labeled scheme attached
//  future-maximal-2-completed the same scheme extended by 1111 -> {4}
//  xyzx-path                  four edges labeled x,y,z,x in the 3-cube
//  pendant-square             a 2-cube with one pendant edge
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

} // namespace cubepeel

#endif
