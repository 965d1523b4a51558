#include <doctest.h>

#include "cubepeel/error.hpp"
#include "cubepeel/one_inclusion.hpp"
#include "helpers.hpp"

#include <set>

using namespace cubepeel;
using namespace cubepeel::testing;

TEST_CASE("graph construction") {
    CHECK(build_graph(full_cube(2)).edges.size() == 4);
    CHECK(build_graph(cls(3, {"010"})).edges.empty());

    OneInclusionGraph g = build_graph(paper_table());
    CHECK(g.edges.size() == 16);
    for (int color = 1; color <= 4; ++color) {
        std::size_t count = 0;
        for (const Edge& e : g.edges)
            if (e.color == color) ++count;
        CHECK(count == 4);
        // edges of color i are in bijection with vertices of the reduction
        CHECK(count == reduction(paper_table(), color).size());
    }
    for (const Edge& e : g.edges) {
        CHECK(popcount_mask(e.a ^ e.b) == 1);
        CHECK((e.a ^ e.b) == (Mask(1) << (e.color - 1)));
        CHECK(lex_less(e.a, e.b));
    }
}

TEST_CASE("cube enumeration") {
    auto squares = enumerate_cubes(paper_table(), 2);
    CHECK(squares.size() == 6);
    std::set<ColorSet> colorsets;
    for (const Cube& q : squares) {
        colorsets.insert(q.colors);
        CHECK(q.dim() == 2);
        CHECK(cube_in_class(paper_table(), q.base, q.colors));
    }
    CHECK(colorsets.size() == 6);  // one per color pair of {1,2,3,4}

    // independent pairwise-scan oracle for squares
    std::set<std::pair<Mask, ColorSet>> oracle;
    for (Mask base : paper_table().concepts())
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                ColorSet colors = (ColorSet(1) << i) | (ColorSet(1) << j);
                if (base & colors) continue;
                bool all = true;
                for (ColorSet sub : {ColorSet(0), ColorSet(1) << i, ColorSet(1) << j, colors})
                    if (!paper_table().contains(base | sub)) all = false;
                if (all) oracle.insert({base, colors});
            }
    std::set<std::pair<Mask, ColorSet>> got;
    for (const Cube& q : squares) got.insert({q.base, q.colors});
    CHECK(got == oracle);

    CHECK(enumerate_cubes(full_cube(3), 3).size() == 1);
    ConceptClass tree = cls(3, {"000", "100", "010", "001"});
    CHECK(enumerate_cubes(tree, 2).empty());
    CHECK(enumerate_cubes(tree, 3).empty());
    CHECK(enumerate_cubes(tree, 0).size() == 4);
}

TEST_CASE("d-complete collections") {
    CHECK(is_d_complete_collection(paper_table(), 2));
    for (int n = 1; n <= 4; ++n) CHECK(is_d_complete_collection(full_cube(n), n));
    CHECK_FALSE(is_d_complete_collection(cls(2, {"00", "01", "11"}), 2));
}

TEST_CASE("incident colors") {
    // oracle: brute-force bit flips around v7 = 1001
    ColorSet expected = 0;
    for (int j = 0; j < 4; ++j)
        if (paper_table().contains(cpt("1001") ^ (Mask(1) << j)))
            expected |= ColorSet(1) << j;
    CHECK(incident_colors(paper_table(), cpt("1001")) == expected);
    CHECK(colorset_indices(expected) == std::vector<int>{2, 4});

    CHECK(incident_colors(cls(3, {"010"}), cpt("010")) == 0);
    CHECK(colorset_indices(incident_colors(full_cube(2), cpt("00"))) ==
          std::vector<int>{1, 2});
    CHECK_THROWS_AS(incident_colors(paper_table(), cpt("1111")), Error);
}

TEST_CASE("shortest-path closure") {
    CHECK(is_shortest_path_closed(paper_table()));
    CHECK(is_shortest_path_closed(full_cube(4)));
    CHECK_FALSE(is_shortest_path_closed(cls(3, {"000", "011"})));
    CHECK(is_shortest_path_closed(reduction(paper_table(), 4)));
    CHECK_FALSE(is_shortest_path_closed(fixture("future-maximal-1").cls));
}
