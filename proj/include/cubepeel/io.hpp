#ifndef CUBEPEEL_IO_HPP
#define CUBEPEEL_IO_HPP

#include "cubepeel/arrangement.hpp"
#include "cubepeel/compression.hpp"
#include "cubepeel/one_inclusion.hpp"
#include "cubepeel/peeling.hpp"

#include <string>

namespace cubepeel {

// concepts.txt: one concept per line as ASCII 0/1, optional leading
// "n=<int>" header; the JSON mirror is {"n": int, "concepts": [...]}.
ConceptClass parse_class_text(const std::string& text);
ConceptClass parse_class_json(const std::string& text);
ConceptClass read_class_file(const std::string& path);  // sniffs the format
std::string class_to_text(const ConceptClass& c, bool header = true);
std::string class_to_json(const ConceptClass& c);

// [{"concept": "1001", "rep": [2, 4]}, ...]
RepresentationMap parse_rep_json(const std::string& text);
RepresentationMap read_rep_file(const std::string& path);
std::string rep_to_json(const RepresentationMap& r);

// {"dim": 2, "kind": "euclidean", "planes": [{"normal": ["1/1","-2/3"],
//  "offset": "5/7"}, ...]}; rationals as "p/q" strings, bit-exact.
Arrangement parse_arrangement_json(const std::string& text);
Arrangement read_arrangement_file(const std::string& path);
std::string arrangement_to_json(const Arrangement& a);

std::string peeling_to_json(const PeelingSequence& seq);
PeelingSequence parse_peeling_json(const std::string& text);

// edge-list text "u v color" plus DOT output for visualization
std::string edge_list_text(const OneInclusionGraph& g);
std::string graph_to_dot(const OneInclusionGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cubepeel

#endif
