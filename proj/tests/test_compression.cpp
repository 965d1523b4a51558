#include <doctest.h>

#include "cubepeel/compression.hpp"
#include "cubepeel/error.hpp"
#include "helpers.hpp"

#include <set>

using namespace cubepeel;
using namespace cubepeel::testing;

namespace {

RepresentationMap table_map() {
    auto seq = corner_peel(paper_table());
    REQUIRE(seq.has_value());
    return representation_from_peeling(paper_table(), *seq);
}

} // namespace

TEST_CASE("representation from peeling") {
    auto seq = corner_peel(full_cube(2));
    REQUIRE(seq.has_value());
    RepresentationMap r = representation_from_peeling(full_cube(2), *seq);
    std::set<ColorSet> image;
    for (const auto& [concept_mask, rep] : r.entries()) image.insert(rep);
    CHECK(image == std::set<ColorSet>{0b00, 0b01, 0b10, 0b11});

    auto lone = corner_peel(cls(3, {"010"}));
    RepresentationMap lr = representation_from_peeling(cls(3, {"010"}), *lone);
    CHECK(lr.entries().size() == 1);
    CHECK(lr.entries()[0].second == 0);

    // replay oracle on the published prefix: v7's representative is {2,4}
    std::vector<Mask> prefix = {cpt("1001"), cpt("1101"), cpt("1100"),
                                cpt("0101"), cpt("0100"), cpt("0000")};
    VerifyResult replay = verify_corner_sequence(paper_table(), prefix);
    auto rest = corner_peel(replay.residual);
    std::vector<Mask> order = prefix;
    for (const PeelEvent& e : rest->events) order.push_back(e.vertex);
    auto full = replay_as_corner_sequence(paper_table(), order);
    REQUIRE(full.has_value());
    RepresentationMap r2 = representation_from_peeling(paper_table(), *full);
    CHECK(*r2.lookup(cpt("1001")) == colorset_from_indices({2, 4}, 4));

    // incomplete sequences are rejected
    PeelingSequence truncated = *full;
    truncated.events.pop_back();
    CHECK_THROWS_AS(representation_from_peeling(paper_table(), truncated), Error);
}

TEST_CASE("corner-peeling maps are bijections onto small color sets") {
    RepresentationMap r = table_map();
    std::set<ColorSet> image;
    for (const auto& [concept_mask, rep] : r.entries()) {
        CHECK(popcount_mask(rep) <= 2);
        image.insert(rep);
    }
    CHECK(image.size() == 11);  // injective onto all <=2-subsets of [4]
    CHECK(r.scheme_size() == 2);
}

TEST_CASE("non-clashing") {
    const Fixture& f1 = fixture("future-maximal-1");
    CHECK(check_non_clashing(f1.cls, *f1.rep).ok);
    const Fixture& f2 = fixture("future-maximal-2");
    CHECK(check_non_clashing(f2.cls, *f2.rep).ok);
    const Fixture& f2c = fixture("future-maximal-2-completed");
    CHECK(check_non_clashing(f2c.cls, *f2c.rep).ok);
    CHECK(check_non_clashing(paper_table(), table_map()).ok);

    CHECK(check_non_clashing(cls(3, {"010"}),
                             RepresentationMap(3, {{cpt("010"), 0}}))
              .ok);

    // brute-force search for a swap that creates a clash
    RepresentationMap r = table_map();
    bool found_clash = false;
    auto entries = r.entries();
    for (std::size_t i = 0; i < entries.size() && !found_clash; ++i)
        for (std::size_t j = i + 1; j < entries.size() && !found_clash; ++j) {
            auto swapped = entries;
            std::swap(swapped[i].second, swapped[j].second);
            ClashWitness w = check_non_clashing(paper_table(),
                                                RepresentationMap(4, swapped));
            if (!w.ok) {
                found_clash = true;
                CHECK(w.first != w.second);
            }
        }
    CHECK(found_clash);
}

TEST_CASE("compress and reconstruct") {
    RepresentationMap r = table_map();
    const ConceptClass& table = paper_table();

    // full samples round-trip to the source concept
    ColorSet all = colorset_from_indices({1, 2, 3, 4}, 4);
    for (Mask m : table.concepts()) {
        ColorSet keep = compress(sample_of(m, all), table, r);
        CHECK(reconstruct(keep, r) == m);
    }

    // spec sample {(x1,1),(x4,1)}: the consistent concepts are v7 and v8
    LabeledSample s{colorset_from_indices({1, 4}, 4),
                    static_cast<Mask>(cpt("1001") & colorset_from_indices({1, 4}, 4))};
    std::vector<Mask> consistent;
    for (Mask m : table.concepts())
        if (((m ^ s.bits) & s.indices) == 0) consistent.push_back(m);
    CHECK(consistent == std::vector<Mask>{cpt("1001"), cpt("1101")});
    // exhaustive oracle over the <=2-subsets of the sample indices
    int hits = 0;
    ColorSet expect = 0;
    ColorSet sub = s.indices;
    for (;;) {
        auto m = r.inverse(sub);
        if (m && ((*m ^ s.bits) & s.indices) == 0) { ++hits; expect = sub; }
        if (sub == 0) break;
        sub = (sub - 1) & s.indices;
    }
    CHECK(hits == 1);
    CHECK(compress(s, table, r) == expect);

    // the empty sample maps to the concept represented by the empty set
    ColorSet empty_keep = compress(LabeledSample{}, table, r);
    CHECK(empty_keep == 0);
    CHECK(reconstruct(0, r) == *r.inverse(0));

    // every <=2-subset reconstructs a distinct concept (11 in total)
    std::set<Mask> reconstructed;
    for (ColorSet rep = 0; rep < 16; ++rep)
        if (popcount_mask(rep) <= 2) reconstructed.insert(reconstruct(rep, r));
    CHECK(reconstructed.size() == 11);

    CHECK_THROWS_AS(reconstruct(colorset_from_indices({1, 2, 3}, 4), r), Error);

    // inconsistent sample: 0011 restricted to {3,4} matches no concept
    LabeledSample bad{colorset_from_indices({3, 4}, 4),
                      static_cast<Mask>(cpt("0011"))};
    CHECK_THROWS_AS(compress(bad, table, r), Error);
}

TEST_CASE("a clashing map is flagged as scheme-invalid by compress") {
    RepresentationMap r = table_map();
    auto entries = r.entries();
    // find a swap that clashes, then exhibit a sample with two hits
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            auto swapped = entries;
            std::swap(swapped[i].second, swapped[j].second);
            RepresentationMap broken(4, swapped);
            ClashWitness w = check_non_clashing(paper_table(), broken);
            if (w.ok) continue;
            ColorSet joint = *broken.lookup(w.first) | *broken.lookup(w.second);
            LabeledSample s = sample_of(w.first, joint);
            CHECK_THROWS_AS(compress(s, paper_table(), broken), Error);
            return;
        }
    FAIL("no clashing swap found");
}

TEST_CASE("non-clashing iff unique consistent representative (n <= 4)") {
    RepresentationMap r = table_map();
    const ConceptClass& table = paper_table();
    // forward direction: every realizable sample has exactly one hit
    for (ColorSet indices = 0; indices < 16; ++indices) {
        std::set<Mask> patterns;
        for (Mask m : table.concepts()) patterns.insert(m & indices);
        for (Mask bits : patterns) {
            int hits = 0;
            ColorSet sub = indices;
            for (;;) {
                auto m = r.inverse(sub);
                if (m && ((*m ^ bits) & indices) == 0) ++hits;
                if (sub == 0) break;
                sub = (sub - 1) & indices;
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("orientation acyclicity") {
    CHECK(is_acyclic(paper_table(), table_map()).acyclic);
    CHECK(is_acyclic(paper_table(), table_map()).anomalies.empty());

    const Fixture& f1 = fixture("future-maximal-1");
    CHECK(is_acyclic(f1.cls, *f1.rep).acyclic);

    // edgeless class
    ConceptClass sparse = cls(3, {"000", "111"});
    RepresentationMap rs(3, {{cpt("000"), 0}, {cpt("111"), colorset_from_indices({1}, 3)}});
    CHECK(is_acyclic(sparse, rs).acyclic);

    // hexagon oriented into a directed 6-cycle
    ConceptClass hex = cls(3, {"100", "110", "010", "011", "001", "101"});
    RepresentationMap cyclic(3, {{cpt("100"), colorset_from_indices({2}, 3)},
                                 {cpt("110"), colorset_from_indices({1}, 3)},
                                 {cpt("010"), colorset_from_indices({3}, 3)},
                                 {cpt("011"), colorset_from_indices({1, 2}, 3)},
                                 {cpt("001"), colorset_from_indices({1, 3}, 3)},
                                 {cpt("101"), colorset_from_indices({2, 3}, 3)}});
    OrientationReport report = is_acyclic(hex, cyclic);
    CHECK_FALSE(report.acyclic);
    CHECK(report.anomalies.empty());
    CHECK(report.cycle.size() == 6);
}
