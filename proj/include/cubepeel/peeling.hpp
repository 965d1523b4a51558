#ifndef CUBEPEEL_PEELING_HPP
#define CUBEPEEL_PEELING_HPP

#include "cubepeel/one_inclusion.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cubepeel {

enum class PeelMode { corner, min };

struct PeelEvent {
    Mask vertex;
    ColorSet representative;  // incident colors at the time of removal
    int cube_dim;             // |representative| (witness cube dimension)
    int step;                 // 1-based
};

struct PeelingSequence {
    PeelMode mode = PeelMode::corner;
    int n = 0;
    int max_degree = 0;
    std::vector<PeelEvent> events;
};

struct CornerCheck {
    bool is_corner = false;
    Cube witness;  // valid when is_corner
};

// Corner vertex: the cube spanned by v's incident colors lies entirely in
// the class.  That cube is then the unique maximum-dimension cube
// containing v and holds all of v's neighbors.  Isolated vertices are
// corners (witness is the 0-cube).
CornerCheck is_corner_vertex(const ConceptClass& c, Mask v);

// Depth-first search with backtracking over corner choices; greedy order
// prefers higher witness dimension, then canonical vertex order.  A vertex
// with no neighbors may only be peeled when it is the last one left:
// peeling an isolated vertex out of a larger class is not a retraction,
// and admitting it would corner-peel disconnected classes.  Returns
// nothing when no ordering exists.
std::optional<PeelingSequence> corner_peel(const ConceptClass& c);

struct VerifyResult {
    bool steps_ok = false;     // every replayed step was a corner peel
    std::size_t failed_step = 0;  // 1-based step of first violation, 0 if none
    ConceptClass residual;     // what remains after the replayed prefix
    bool accepted() const { return steps_ok && residual.empty(); }
};

// Replays an externally supplied vertex order against the corner rules.
VerifyResult verify_corner_sequence(const ConceptClass& c, const std::vector<Mask>& order);

// Same replay, but returns the full event record (representatives read off
// the residual graph); nullopt unless the order is a complete corner
// peeling of c.
std::optional<PeelingSequence> replay_as_corner_sequence(const ConceptClass& c,
                                                         const std::vector<Mask>& order);

// Iteratively removes a minimum-degree vertex (ties: canonical order).
PeelingSequence min_peel(const ConceptClass& c);

} // namespace cubepeel

#endif
