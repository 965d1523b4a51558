#include "cubepeel/io.hpp"
#include "cubepeel/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cubepeel {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw input_error("bad-json", "cannot parse " + what + " JSON");
    return j;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("no-such-file", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot-write", "cannot write '" + path + "'");
    out << content;
}

ConceptClass parse_class_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    int n = -1;
    bool first = true;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') { first = false; continue; }
        if (first && line.rfind("n=", 0) == 0) {
            n = std::stoi(line.substr(2));
            first = false;
            continue;
        }
        first = false;
        rows.push_back(line);
    }
    if (n < 0) {
        if (rows.empty())
            throw input_error("empty-file", "class file has no concepts and no header");
        n = static_cast<int>(rows[0].size());
    }
    std::vector<Mask> concepts;
    concepts.reserve(rows.size());
    for (const auto& row : rows) concepts.push_back(concept_from_string(row, n));
    return ConceptClass(n, std::move(concepts));
}

ConceptClass parse_class_json(const std::string& text) {
    json j = parse_json(text, "class");
    if (!j.is_object() || !j.contains("n") || !j.contains("concepts"))
        throw input_error("bad-class", "class JSON needs fields 'n' and 'concepts'");
    int n = j["n"].get<int>();
    std::vector<Mask> concepts;
    for (const auto& item : j["concepts"])
        concepts.push_back(concept_from_string(item.get<std::string>(), n));
    return ConceptClass(n, std::move(concepts));
}

ConceptClass read_class_file(const std::string& path) {
    std::string text = read_file(path);
    std::string t = trim(text);
    if (!t.empty() && t[0] == '{') return parse_class_json(text);
    return parse_class_text(text);
}

std::string class_to_text(const ConceptClass& c, bool header) {
    std::string out = header ? "n=" + std::to_string(c.n()) + "\n" : "";
    for (Mask m : c.concepts()) out += concept_to_string(m, c.n()) + "\n";
    return out;
}

std::string class_to_json(const ConceptClass& c) {
    json j;
    j["n"] = c.n();
    j["concepts"] = json::array();
    for (Mask m : c.concepts()) j["concepts"].push_back(concept_to_string(m, c.n()));
    return j.dump(2) + "\n";
}

RepresentationMap parse_rep_json(const std::string& text) {
    json j = parse_json(text, "representation map");
    if (!j.is_array())
        throw input_error("bad-rep", "representation map JSON must be an array");
    int n = -1;
    std::vector<std::pair<Mask, ColorSet>> entries;
    for (const auto& item : j) {
        std::string bits = item.at("concept").get<std::string>();
        if (n < 0) n = static_cast<int>(bits.size());
        std::vector<int> rep = item.at("rep").get<std::vector<int>>();
        entries.push_back({concept_from_string(bits, n), colorset_from_indices(rep, n)});
    }
    if (n < 0) throw input_error("bad-rep", "representation map is empty");
    return RepresentationMap(n, std::move(entries));
}

RepresentationMap read_rep_file(const std::string& path) {
    return parse_rep_json(read_file(path));
}

std::string rep_to_json(const RepresentationMap& r) {
    json j = json::array();
    for (const auto& [concept_mask, rep] : r.entries()) {
        json e;
        e["concept"] = concept_to_string(concept_mask, r.n());
        e["rep"] = colorset_indices(rep);
        j.push_back(e);
    }
    return j.dump(2) + "\n";
}

Arrangement parse_arrangement_json(const std::string& text) {
    json j = parse_json(text, "arrangement");
    Arrangement a;
    a.dim = j.at("dim").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "euclidean")
        a.kind = GeometryKind::euclidean;
    else if (kind == "klein_disk")
        a.kind = GeometryKind::klein_disk;
    else
        throw input_error("bad-kind", "arrangement kind must be euclidean or klein_disk");
    for (const auto& item : j.at("planes")) {
        Hyperplane h;
        for (const auto& coeff : item.at("normal"))
            h.normal.push_back(parse_rational(coeff.get<std::string>()));
        h.offset = parse_rational(item.at("offset").get<std::string>());
        a.planes.push_back(std::move(h));
    }
    return a;
}

Arrangement read_arrangement_file(const std::string& path) {
    return parse_arrangement_json(read_file(path));
}

std::string arrangement_to_json(const Arrangement& a) {
    json j;
    j["dim"] = a.dim;
    j["kind"] = a.kind == GeometryKind::euclidean ? "euclidean" : "klein_disk";
    j["planes"] = json::array();
    for (const Hyperplane& h : a.planes) {
        json p;
        p["normal"] = json::array();
        for (const Rat& c : h.normal) p["normal"].push_back(format_rational(c));
        p["offset"] = format_rational(h.offset);
        j["planes"].push_back(p);
    }
    return j.dump(2) + "\n";
}

std::string peeling_to_json(const PeelingSequence& seq) {
    json j;
    j["mode"] = seq.mode == PeelMode::corner ? "corner" : "min";
    j["n"] = seq.n;
    j["max_degree"] = seq.max_degree;
    j["events"] = json::array();
    for (const PeelEvent& e : seq.events) {
        json ev;
        ev["vertex"] = concept_to_string(e.vertex, seq.n);
        ev["rep"] = colorset_indices(e.representative);
        ev["dim"] = e.cube_dim;
        ev["step"] = e.step;
        j["events"].push_back(ev);
    }
    return j.dump(2) + "\n";
}

PeelingSequence parse_peeling_json(const std::string& text) {
    json j = parse_json(text, "peeling sequence");
    PeelingSequence seq;
    std::string mode = j.at("mode").get<std::string>();
    seq.mode = mode == "corner" ? PeelMode::corner : PeelMode::min;
    seq.n = j.at("n").get<int>();
    seq.max_degree = j.at("max_degree").get<int>();
    for (const auto& item : j.at("events")) {
        PeelEvent e;
        e.vertex = concept_from_string(item.at("vertex").get<std::string>(), seq.n);
        e.representative =
            colorset_from_indices(item.at("rep").get<std::vector<int>>(), seq.n);
        e.cube_dim = item.at("dim").get<int>();
        e.step = item.at("step").get<int>();
        seq.events.push_back(e);
    }
    return seq;
}

std::string edge_list_text(const OneInclusionGraph& g) {
    std::string out;
    for (const Edge& e : g.edges)
        out += concept_to_string(e.a, g.cls.n()) + " " + concept_to_string(e.b, g.cls.n()) +
               " " + std::to_string(e.color) + "\n";
    return out;
}

std::string graph_to_dot(const OneInclusionGraph& g) {
    std::string out = "graph one_inclusion {\n";
    for (Mask m : g.cls.concepts())
        out += "  \"" + concept_to_string(m, g.cls.n()) + "\";\n";
    for (const Edge& e : g.edges)
        out += "  \"" + concept_to_string(e.a, g.cls.n()) + "\" -- \"" +
               concept_to_string(e.b, g.cls.n()) + "\" [label=\"" +
               std::to_string(e.color) + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace cubepeel
