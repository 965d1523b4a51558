#include <doctest.h>

#include "cubepeel/arrangement.hpp"
#include "cubepeel/error.hpp"
#include "helpers.hpp"

#include <set>

using namespace cubepeel;
using namespace cubepeel::testing;

namespace {

Hyperplane line(long long nx, long long ny, long long num, long long den = 1) {
    return Hyperplane{{Rat(nx), Rat(ny)}, Rat(num, den)};
}

Arrangement four_lines() {
    Arrangement a;
    a.dim = 2;
    a.kind = GeometryKind::euclidean;
    a.planes = {line(1, 0, 0), line(0, 1, 0), line(1, 1, 1), line(1, -1, 3)};
    return a;
}

Arrangement klein_claw() {
    Arrangement a;
    a.dim = 1;
    a.kind = GeometryKind::klein_disk;
    a.planes = {line(1, 0, 4, 5), line(0, 1, 4, 5), line(-1, -1, 9, 10)};
    return a;
}

Arrangement klein_cross() {
    Arrangement a;
    a.dim = 2;
    a.kind = GeometryKind::klein_disk;
    a.planes = {line(1, 0, 1, 10), line(0, 1, 1, 8)};
    return a;
}

Arrangement klein_four() {
    Arrangement a;
    a.dim = 2;
    a.kind = GeometryKind::klein_disk;
    a.planes = {line(1, 0, 1, 10), line(0, 1, 1, 9), line(1, 1, 1, 3), line(1, -1, 1, 7)};
    return a;
}

std::vector<int> event_dims(const PeelingSequence& seq) {
    std::vector<int> dims;
    for (const PeelEvent& e : seq.events) dims.push_back(e.cube_dim);
    return dims;
}

} // namespace

TEST_CASE("validation") {
    CHECK(validate(four_lines()).ok);

    Arrangement parallel;
    parallel.dim = 2;
    parallel.kind = GeometryKind::euclidean;
    parallel.planes = {line(1, 0, 0), line(2, 0, 1), line(0, 1, 0)};
    ValidationReport r = validate(parallel);
    CHECK_FALSE(r.ok);
    CHECK(r.witness == std::vector<int>{1, 2});

    // triple point
    Arrangement concurrent;
    concurrent.dim = 2;
    concurrent.kind = GeometryKind::euclidean;
    concurrent.planes = {line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)};
    CHECK_FALSE(validate(concurrent).ok);

    CHECK(validate(klein_claw()).ok);
    CHECK(validate(klein_cross()).ok);
    CHECK(validate(klein_four()).ok);

    // chords meeting inside the disk violate d = 1
    Arrangement bad = klein_claw();
    bad.planes[2] = line(0, 1, -4, 5);  // parallel to plane 2? no: crosses plane 1 inside
    bad.planes[2] = line(1, 1, 0);      // passes through the origin
    ValidationReport rk = validate(bad);
    CHECK_FALSE(rk.ok);

    // a line missing the disk entirely
    Arrangement far = klein_claw();
    far.planes[0] = line(1, 0, 3, 2);
    CHECK_FALSE(validate(far).ok);

    // d = 2 demands crossings strictly inside
    Arrangement not_crossing = klein_cross();
    not_crossing.planes[1] = line(1, 0, 1, 2);  // parallel to plane 1
    CHECK_FALSE(validate(not_crossing).ok);
}

TEST_CASE("euclidean cells") {
    Arrangement two;
    two.dim = 2;
    two.kind = GeometryKind::euclidean;
    two.planes = {line(1, 0, 0), line(0, 1, 0)};
    CellEnumeration e = cells(two);
    CHECK(e.cls == full_cube(2));

    CellEnumeration four = cells(four_lines());
    CHECK(four.cls.size() == 11);
    CHECK(is_maximum(four.cls));
    CHECK(vc_dimension(four.cls) == 2);
    // representatives realize their sign vectors
    for (const auto& [cell, point] : four.map.representatives) {
        for (int i = 0; i < 4; ++i) {
            const Hyperplane& h = four_lines().planes[static_cast<std::size_t>(i)];
            Rat v = h.normal[0] * point[0] + h.normal[1] * point[1] - h.offset;
            CHECK(sign(v) == (((cell >> i) & 1u) ? 1 : -1));
        }
    }
}

TEST_CASE("reduction correspondence along a plane") {
    Arrangement a = four_lines();
    CellEnumeration e = cells(a);
    for (int i = 0; i < 4; ++i) {
        const Hyperplane& h = a.planes[static_cast<std::size_t>(i)];
        Rat q = h.normal[0] * h.normal[0] + h.normal[1] * h.normal[1];
        std::vector<Rat> x0{h.offset * h.normal[0] / q, h.offset * h.normal[1] / q};
        std::vector<Rat> t{-h.normal[1], h.normal[0]};
        Arrangement restricted;
        restricted.dim = 1;
        restricted.kind = GeometryKind::euclidean;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            const Hyperplane& g = a.planes[static_cast<std::size_t>(j)];
            Hyperplane hr;
            hr.normal = {g.normal[0] * t[0] + g.normal[1] * t[1]};
            hr.offset = g.offset - (g.normal[0] * x0[0] + g.normal[1] * x0[1]);
            restricted.planes.push_back(hr);
        }
        CHECK(cells(restricted).cls == reduction(e.cls, i + 1));
    }
}

TEST_CASE("euclidean sweep of four lines") {
    PeelingSequence seq = sweep(four_lines());
    CHECK(seq.events.size() == 11);
    std::vector<int> dims = event_dims(seq);
    std::vector<int> expected = {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 0};
    CHECK(dims == expected);
    CHECK(seq.max_degree == 2);

    // residual after the six vertex events is a 5-vertex 1-maximum stick
    std::vector<Mask> prefix;
    for (int i = 0; i < 6; ++i) prefix.push_back(seq.events[static_cast<std::size_t>(i)].vertex);
    VerifyResult replay = verify_corner_sequence(cells(four_lines()).cls, prefix);
    CHECK(replay.steps_ok);
    CHECK(replay.residual.size() == 5);
    CHECK(is_maximum(replay.residual));
    CHECK(vc_dimension(replay.residual) == 1);
}

TEST_CASE("one point on a line") {
    Arrangement a;
    a.dim = 1;
    a.kind = GeometryKind::euclidean;
    a.planes = {Hyperplane{{Rat(2)}, Rat(1)}};
    CellEnumeration e = cells(a);
    CHECK(e.cls.size() == 2);
    PeelingSequence seq = sweep(a);
    CHECK(event_dims(seq) == std::vector<int>{1, 0});
}

TEST_CASE("plane arrangement in three dimensions") {
    Arrangement a;
    a.dim = 3;
    a.kind = GeometryKind::euclidean;
    a.planes = {Hyperplane{{Rat(1), Rat(0), Rat(0)}, Rat(0)},
                Hyperplane{{Rat(0), Rat(1), Rat(0)}, Rat(0)},
                Hyperplane{{Rat(0), Rat(0), Rat(1)}, Rat(0)},
                Hyperplane{{Rat(1), Rat(1), Rat(1)}, Rat(1)}};
    CHECK(validate(a).ok);
    CellEnumeration e = cells(a);
    CHECK(e.cls.size() == sauer_bound(4, 3));
    PeelingSequence seq = sweep(a);
    std::vector<int> dims = event_dims(seq);
    std::vector<int> expected = {3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 0};
    CHECK(dims == expected);
}

TEST_CASE("klein claw: three disjoint chords make a tree") {
    CellEnumeration e = cells(klein_claw());
    CHECK(e.cls.size() == 4);
    CHECK(is_maximum(e.cls));
    CHECK(vc_dimension(e.cls) == 1);
    // representatives stay inside the unit disk
    for (const auto& [cell, point] : e.map.representatives)
        CHECK(point[0] * point[0] + point[1] * point[1] < 1);

    PeelingSequence seq = sweep_klein(klein_claw());
    CHECK(seq.events.size() == 4);
    for (int d : event_dims(seq)) CHECK(d <= 1);
    CHECK(verify_corner_sequence(e.cls, [&] {
              std::vector<Mask> order;
              for (const PeelEvent& ev : seq.events) order.push_back(ev.vertex);
              return order;
          }()).accepted());
}

TEST_CASE("klein crossing chords") {
    CellEnumeration e = cells(klein_cross());
    CHECK(e.cls == full_cube(2));
    PeelingSequence seq = sweep_klein(klein_cross());
    std::vector<int> dims = event_dims(seq);
    CHECK(dims[0] == 2);
    for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] <= 1);
}

TEST_CASE("klein single chord") {
    Arrangement a;
    a.dim = 1;
    a.kind = GeometryKind::klein_disk;
    a.planes = {line(1, 0, 1, 2)};
    PeelingSequence seq = sweep_klein(a);
    CHECK(seq.events.size() == 2);
}

TEST_CASE("klein sweep interleaves cube dimensions") {
    CellEnumeration e = cells(klein_four());
    CHECK(e.cls.size() == sauer_bound(4, 2));
    CHECK(vc_dimension(e.cls) == 2);
    PeelingSequence seq = sweep_klein(klein_four());
    std::vector<int> dims = event_dims(seq);
    // some low-dimensional peel happens before the last 2-cube peel
    std::size_t last2 = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] == 2) last2 = i;
    bool interleaved = false;
    for (std::size_t i = 0; i < last2; ++i)
        if (dims[i] < 2) interleaved = true;
    CHECK(interleaved);
}

TEST_CASE("sweep direction pool is deterministic") {
    CHECK(sweep_direction(2, 0) == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(sweep_direction(3, 1) == std::vector<Rat>{Rat(1), Rat(3), Rat(9)});
    PeelingSequence a = sweep(four_lines());
    PeelingSequence b = sweep(four_lines());
    for (std::size_t i = 0; i < a.events.size(); ++i)
        CHECK(a.events[i].vertex == b.events[i].vertex);
}
