#include <doctest.h>

#include "cubepeel/error.hpp"
#include "cubepeel/peeling.hpp"
#include "helpers.hpp"

using namespace cubepeel;
using namespace cubepeel::testing;

namespace {

std::vector<Mask> vertices_of(const PeelingSequence& seq) {
    std::vector<Mask> out;
    for (const PeelEvent& e : seq.events) out.push_back(e.vertex);
    return out;
}

} // namespace

TEST_CASE("corner vertex detection") {
    CornerCheck v7 = is_corner_vertex(paper_table(), cpt("1001"));
    CHECK(v7.is_corner);
    CHECK(v7.witness.base == cpt("1000"));
    CHECK(colorset_indices(v7.witness.colors) == std::vector<int>{2, 4});

    // isolated vertex: the 0-cube is its own witness
    CornerCheck lone = is_corner_vertex(cls(3, {"010"}), cpt("010"));
    CHECK(lone.is_corner);
    CHECK(lone.witness.colors == 0);

    // plus-shaped tree: center has four incident edges and no square
    ConceptClass plus = cls(4, {"0000", "1000", "0100", "0010", "0001"});
    CHECK_FALSE(is_corner_vertex(plus, cpt("0000")).is_corner);
    CHECK(is_corner_vertex(plus, cpt("1000")).is_corner);

    CHECK_THROWS_AS(is_corner_vertex(plus, cpt("1111")), Error);
}

TEST_CASE("corner peeling the table class") {
    auto seq = corner_peel(paper_table());
    REQUIRE(seq.has_value());
    CHECK(seq->events.size() == 11);
    CHECK(seq->max_degree == 2);
    CHECK(verify_corner_sequence(paper_table(), vertices_of(*seq)).accepted());

    // shortest-path closure survives every peel
    ConceptClass rest = paper_table();
    for (const PeelEvent& e : seq->events) {
        CHECK(is_shortest_path_closed(rest));
        std::vector<Mask> verts;
        for (Mask m : rest.concepts())
            if (m != e.vertex) verts.push_back(m);
        rest = ConceptClass(4, std::move(verts));
    }
}

TEST_CASE("corner peeling degenerate and failing inputs") {
    auto lone = corner_peel(cls(4, {"0110"}));
    REQUIRE(lone.has_value());
    CHECK(lone->events.size() == 1);
    CHECK(lone->events[0].representative == 0);
    CHECK(lone->max_degree == 0);

    auto empty = corner_peel(ConceptClass(3, {}));
    REQUIRE(empty.has_value());
    CHECK(empty->events.empty());

    // disconnected classes admit no corner-peeling
    CHECK_FALSE(corner_peel(fixture("future-maximal-1").cls).has_value());
    CHECK_FALSE(corner_peel(cls(3, {"000", "100", "011", "111"})).has_value());
}

TEST_CASE("the published peeling prefix replays cleanly") {
    std::vector<Mask> prefix = {cpt("1001"), cpt("1101"), cpt("1100"),
                                cpt("0101"), cpt("0100"), cpt("0000")};
    VerifyResult replay = verify_corner_sequence(paper_table(), prefix);
    CHECK(replay.steps_ok);
    CHECK(replay.residual == cls(4, {"1000", "0010", "1010", "0110", "0111"}));

    // extending by any valid peeling of the remaining stick completes it
    auto rest = corner_peel(replay.residual);
    REQUIRE(rest.has_value());
    std::vector<Mask> full = prefix;
    for (const PeelEvent& e : rest->events) full.push_back(e.vertex);
    CHECK(verify_corner_sequence(paper_table(), full).accepted());

    // v8 first: degree 3, not a corner
    std::vector<Mask> bad = {cpt("1101"), cpt("1001")};
    VerifyResult broken = verify_corner_sequence(paper_table(), bad);
    CHECK_FALSE(broken.steps_ok);
    CHECK(broken.failed_step == 1);

    CHECK(verify_corner_sequence(ConceptClass(2, {}), {}).accepted());
}

TEST_CASE("min peeling") {
    PeelingSequence stick = min_peel(cls(2, {"00", "01", "11"}));
    CHECK(stick.events.size() == 3);
    CHECK(stick.events[0].cube_dim == 1);  // a leaf goes first

    PeelingSequence pendant = min_peel(fixture("pendant-square").cls);
    CHECK(pendant.events[0].vertex == cpt("110"));
    CHECK(pendant.events[0].cube_dim == 1);

    CHECK(min_peel(full_cube(2)).max_degree == 2);

    // min-peeling proceeds on disconnected classes too
    CHECK(min_peel(fixture("future-maximal-1").cls).events.size() == 10);
}

TEST_CASE("forced highest-dimension-first order on the pendant fixture") {
    auto seq = corner_peel(fixture("pendant-square").cls);
    REQUIRE(seq.has_value());
    CHECK(seq->events[0].cube_dim == 2);
    PeelingSequence mp = min_peel(fixture("pendant-square").cls);
    CHECK(mp.events[0].cube_dim == 1);
}

TEST_CASE("replay_as_corner_sequence matches verify") {
    auto seq = corner_peel(paper_table());
    REQUIRE(seq.has_value());
    auto replay = replay_as_corner_sequence(paper_table(), vertices_of(*seq));
    REQUIRE(replay.has_value());
    for (std::size_t i = 0; i < seq->events.size(); ++i) {
        CHECK(replay->events[i].vertex == seq->events[i].vertex);
        CHECK(replay->events[i].representative == seq->events[i].representative);
    }
    CHECK_FALSE(replay_as_corner_sequence(paper_table(), {cpt("0000")}).has_value());
}
