#include "cubepeel/fixtures.hpp"
#include "cubepeel/error.hpp"

namespace cubepeel {

namespace {

ConceptClass make(int n, const std::vector<std::string>& rows) {
    std::vector<Mask> concepts;
    concepts.reserve(rows.size());
    for (const auto& row : rows) concepts.push_back(concept_from_string(row, n));
    return ConceptClass(n, std::move(concepts));
}

RepresentationMap make_rep(int n,
                           const std::vector<std::pair<std::string, std::vector<int>>>& rows) {
    std::vector<std::pair<Mask, ColorSet>> entries;
    entries.reserve(rows.size());
    for (const auto& [bits, rep] : rows)
        entries.push_back({concept_from_string(bits, n), colorset_from_indices(rep, n)});
    return RepresentationMap(n, std::move(entries));
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;

    out.push_back(Fixture{
        "table-euclidean",
        "2-maximum class in the 4-cube realized by four generic lines in the plane",
        make(4, {"0000", "1000", "0100", "0010", "1010", "1100", "0110", "1001", "1101",
                 "0101", "0111"}),
        std::nullopt});

    out.push_back(Fixture{
        "future-maximal-1",
        "disconnected VC-2 maximal class: four squares sharing 0000 and an isolated 1111",
        make(4, {"0000", "1000", "0100", "0010", "0001", "1100", "0011", "0110", "1001",
                 "1111"}),
        make_rep(4, {{"0000", {}},
                     {"1000", {1}},
                     {"0100", {2}},
                     {"0010", {3}},
                     {"0001", {4}},
                     {"1100", {1, 2}},
                     {"0011", {3, 4}},
                     {"0110", {2, 3}},
                     {"1001", {1, 4}},
                     {"1111", {1, 3}}})});

    out.push_back(Fixture{
        "future-maximal-2",
        "connected VC-2 maximal class: three squares sharing 0000 with pendant edges",
        make(4, {"0000", "1000", "0100", "0010", "1100", "0110", "1010", "1011", "1101",
                 "0111"}),
        make_rep(4, {{"0000", {}},
                     {"1000", {1}},
                     {"0100", {2}},
                     {"0010", {3}},
                     {"1100", {1, 2}},
                     {"0110", {2, 3}},
                     {"1010", {1, 3}},
                     {"1011", {2, 4}},
                     {"1101", {3, 4}},
                     {"0111", {1, 4}}})});

    out.push_back(Fixture{
        "future-maximal-2-completed",
        "the same labeling completed by the extra vertex 1111 -> {4}",
        make(4, {"0000", "1000", "0100", "0010", "1100", "0110", "1010", "1011", "1101",
                 "0111", "1111"}),
        make_rep(4, {{"0000", {}},
                     {"1000", {1}},
                     {"0100", {2}},
                     {"0010", {3}},
                     {"1100", {1, 2}},
                     {"0110", {2, 3}},
                     {"1010", {1, 3}},
                     {"1011", {2, 4}},
                     {"1101", {3, 4}},
                     {"0111", {1, 4}},
                     {"1111", {4}}})});

    out.push_back(Fixture{"xyzx-path",
                          "four edges labeled x,y,z,x in the 3-cube; peelable but its "
                          "x-reduction is two isolated vertices",
                          make(3, {"000", "100", "110", "111", "011"}), std::nullopt});

    out.push_back(Fixture{"pendant-square",
                          "a 2-cube with one pendant edge; min-peeling starts at the "
                          "leaf, corner-peeling at the square",
                          make(3, {"000", "001", "010", "011", "110"}), std::nullopt});

    return out;
}

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build_fixtures();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    throw input_error("no-such-fixture", "unknown fixture '" + name + "'");
}

} // namespace cubepeel
