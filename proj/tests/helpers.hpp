#ifndef CUBEPEEL_TESTS_HELPERS_HPP
#define CUBEPEEL_TESTS_HELPERS_HPP

#include "cubepeel/concept_class.hpp"
#include "cubepeel/fixtures.hpp"

#include <cstring>
#include <initializer_list>
#include <random>
#include <vector>

namespace cubepeel::testing {

inline Mask cpt(const char* bits) {
    return concept_from_string(bits, static_cast<int>(std::strlen(bits)));
}

inline ConceptClass cls(int n, std::initializer_list<const char*> rows) {
    std::vector<Mask> concepts;
    for (const char* row : rows) concepts.push_back(concept_from_string(row, n));
    return ConceptClass(n, std::move(concepts));
}

inline const ConceptClass& paper_table() { return fixture("table-euclidean").cls; }

// deterministic random subsets of {0,1}^n
inline ConceptClass random_class(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> size_dist(1, (1 << n));
    std::uniform_int_distribution<Mask> vert(0, (Mask(1) << n) - 1);
    int size = size_dist(rng);
    std::vector<Mask> concepts;
    for (int i = 0; i < size; ++i) concepts.push_back(vert(rng));
    return ConceptClass(n, std::move(concepts));
}

} // namespace cubepeel::testing

#endif
