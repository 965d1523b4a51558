#include <doctest.h>

#include "cubepeel/error.hpp"
#include "cubepeel/lifting.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <set>

using namespace cubepeel;
using namespace cubepeel::testing;

namespace {

std::set<std::vector<Mask>> as_set(const std::vector<ConceptClass>& classes) {
    std::set<std::vector<Mask>> out;
    for (const ConceptClass& c : classes) out.insert(c.concepts());
    return out;
}

// every subset of {0,1}^n of the right cardinality that is maximum
std::set<std::vector<Mask>> brute_force_maximum(int n, int d) {
    std::set<std::vector<Mask>> out;
    std::uint64_t size = sauer_bound(n, d);
    std::vector<Mask> verts((std::size_t(1) << n));
    for (Mask m = 0; m < (Mask(1) << n); ++m) verts[m] = m;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    int total = 1 << n, k = static_cast<int>(size);
    for (;;) {
        std::vector<Mask> subset;
        for (int i : idx) subset.push_back(verts[static_cast<std::size_t>(i)]);
        ConceptClass c(n, subset);
        if (vc_dimension(c) == d && is_maximum(c)) out.insert(c.concepts());
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace

TEST_CASE("construct base cases") {
    auto singletons = construct_maximum_classes(3, 0);
    CHECK(singletons.size() == 8);
    for (const ConceptClass& c : singletons) CHECK(c.size() == 1);

    auto full = construct_maximum_classes(3, 3);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == full_cube(3));

    CHECK_THROWS_AS(construct_maximum_classes(3, 4), Error);
}

TEST_CASE("construct matches brute force on small cubes") {
    CHECK(as_set(construct_maximum_classes(2, 1)) == brute_force_maximum(2, 1));
    CHECK(construct_maximum_classes(2, 1).size() == 4);
    CHECK(as_set(construct_maximum_classes(3, 1)) == brute_force_maximum(3, 1));
    CHECK(as_set(construct_maximum_classes(3, 2)) == brute_force_maximum(3, 2));
}

TEST_CASE("construct outputs are maximum d-complete collections") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= n; ++d) {
            auto classes = construct_maximum_classes(n, d);
            std::set<std::vector<Mask>> unique;
            for (const ConceptClass& c : classes) {
                CHECK(c.size() == sauer_bound(n, d));
                CHECK(vc_dimension(c) == d);
                CHECK(is_maximum(c));
                CHECK(is_d_complete_collection(c, d));
                unique.insert(c.concepts());
            }
            CHECK(unique.size() == classes.size());  // deduplicated
        }
}

TEST_CASE("construct(4,2) contains the table class") {
    auto classes = construct_maximum_classes(4, 2);
    bool found = false;
    for (const ConceptClass& c : classes)
        if (c == paper_table()) found = true;
    CHECK(found);
}

TEST_CASE("component partition") {
    // a single square: one component
    auto one = connected_components_mod(full_cube(2), cls(2, {"00", "01", "10"}));
    CHECK(one.size() == 1);
    CHECK(one[0].size() == 1);

    // path with its middle vertex removed splits into two edge components
    auto two = connected_components_mod(cls(2, {"00", "01", "11"}), cls(2, {"01"}));
    CHECK(two.size() == 2);

    // union-find oracle: components never join across the subclass
    ConceptClass c = cls(2, {"00", "01", "11"});
    ConceptClass cp = cls(2, {"01"});
    auto comps = connected_components_mod(c, cp);
    for (const auto& comp : comps)
        for (const Cube& q : comp)
            for (const auto& other_comp : comps) {
                if (&comp == &other_comp) continue;
                for (const Cube& other : other_comp) CHECK_FALSE(q == other);
            }

    CHECK_THROWS_AS(connected_components_mod(full_cube(2), full_cube(2)), Error);
    CHECK_THROWS_AS(connected_components_mod(cls(2, {"00", "01"}), cls(2, {"00"})), Error);
}

TEST_CASE("shift moves lifted components down") {
    // downward-closed classes are fixed points
    ConceptClass down = cls(3, {"000", "100", "010", "001", "110", "101", "011"});
    for (int color = 1; color <= 3; ++color) CHECK(shift(down, color) == down);
    CHECK(shift(full_cube(3), 2) == full_cube(3));

    // repeated shifting reaches the downward-closed 2-maximum class
    ConceptClass current = paper_table();
    for (int round = 0; round < 8; ++round)
        for (int color = 1; color <= 4; ++color) current = shift(current, color);
    std::vector<Mask> expected;
    for (Mask m = 0; m < 16; ++m)
        if (popcount_mask(m) <= 2) expected.push_back(m);
    CHECK(current == ConceptClass(4, std::move(expected)));

    // invariants on a batch of constructed classes
    auto classes = construct_maximum_classes(4, 2);
    for (std::size_t i = 0; i < classes.size(); i += 7) {
        const ConceptClass& c = classes[i];
        ConceptClass s = shift(c, 1 + static_cast<int>(i % 4));
        CHECK(s.size() == c.size());
        CHECK(vc_dimension(s) == vc_dimension(c));
        CHECK(is_maximum(s));
    }

    CHECK_THROWS_AS(shift(cls(2, {"00", "11"}), 1), Error);
}
