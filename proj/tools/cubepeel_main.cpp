#include <CLI11.hpp>
#include <json.hpp>

#include "cubepeel/arrangement.hpp"
#include "cubepeel/compression.hpp"
#include "cubepeel/error.hpp"
#include "cubepeel/fixtures.hpp"
#include "cubepeel/io.hpp"
#include "cubepeel/lifting.hpp"
#include "cubepeel/peeling.hpp"
#include "cubepeel/svg.hpp"
#include "cubepeel/topology.hpp"

#include <future>
#include <iostream>

using nlohmann::json;
using namespace cubepeel;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

std::string colorset_key(ColorSet s) {
    std::string key;
    for (int i : colorset_indices(s)) {
        if (!key.empty()) key += ",";
        key += std::to_string(i);
    }
    return key.empty() ? "-" : key;
}

json analyze_class(const ConceptClass& cls, std::size_t budget) {
    json j;
    j["n"] = cls.n();
    j["size"] = cls.size();
    j["vc"] = vc_dimension(cls);
    j["maximum"] = is_maximum(cls);
    j["maximal"] = is_maximal(cls);
    j["connected_components"] = component_count(cls);
    j["shortest_path_closed"] = is_shortest_path_closed(cls);
    bool has_edges = !build_graph(cls).edges.empty();
    if (has_edges) {
        BoundaryReport b = boundary(cls);
        json counts = json::object();
        for (const auto& [colors, count] : b.per_colorset_counts)
            counts[colorset_key(colors)] = count;
        j["boundary"] = {{"d", b.d},
                         {"cube_count", b.boundary_cubes.size()},
                         {"counts", counts}};
    }
    j["collapsible"] = to_string(is_collapsible(cls, budget));
    j["strongly_contractible"] = to_string(is_strongly_contractible(cls, budget));
    return j;
}

LabeledSample parse_sample(const std::string& text, int n) {
    LabeledSample s;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw input_error("bad-sample", "sample entries look like '3=1'");
        int index = std::stoi(token.substr(0, eq));
        int bit = std::stoi(token.substr(eq + 1));
        if (index < 1 || index > n || (bit != 0 && bit != 1))
            throw input_error("bad-sample", "sample entry '" + token + "' out of range");
        ColorSet mask = ColorSet(1) << (index - 1);
        if (s.indices & mask)
            throw input_error("bad-sample", "repeated index in sample");
        s.indices |= mask;
        if (bit) s.bits |= mask;
    }
    return s;
}

std::optional<std::vector<Rat>> parse_direction(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<Rat> dir;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) dir.push_back(parse_rational(token));
    return dir;
}

int run(int argc, char** argv) {
    CLI::App app{"cubepeel: maximum concept classes, corner peeling, unlabeled "
                 "compression, and exact hyperplane-arrangement sweeps"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    // construct
    auto* c_construct = app.add_subcommand("construct", "enumerate d-maximum classes in the n-cube");
    int opt_n = 0, opt_d = 0;
    std::string opt_out, opt_class, opt_rep, opt_arrangement, opt_mode = "corner";
    std::string opt_sample, opt_svg, opt_direction, opt_cells_out, opt_edges_out, opt_dot_out;
    bool opt_force = false;
    int opt_seed = 0, opt_jobs = 1;
    std::size_t opt_budget = 200000;
    c_construct->add_option("--n", opt_n)->required();
    c_construct->add_option("--d", opt_d)->required();
    c_construct->add_option("--out", opt_out);
    c_construct->add_flag("--force", opt_force);

    // analyze
    auto* c_analyze = app.add_subcommand("analyze", "report invariants of concept classes");
    std::vector<std::string> analyze_files;
    c_analyze->add_option("--class", analyze_files)->required();
    c_analyze->add_option("--out", opt_out);
    c_analyze->add_option("--edges-out", opt_edges_out);
    c_analyze->add_option("--dot-out", opt_dot_out);
    c_analyze->add_option("--budget", opt_budget);
    c_analyze->add_option("--jobs", opt_jobs);

    // peel
    auto* c_peel = app.add_subcommand("peel", "corner- or min-peel a class");
    c_peel->add_option("--class", opt_class)->required();
    c_peel->add_option("--mode", opt_mode)->check(CLI::IsMember({"corner", "min"}));
    c_peel->add_option("--out", opt_out);

    // compress
    auto* c_compress = app.add_subcommand("compress", "compress a labeled sample");
    c_compress->add_option("--class", opt_class)->required();
    c_compress->add_option("--rep", opt_rep)->required();
    c_compress->add_option("--sample", opt_sample)->required();
    c_compress->add_option("--out", opt_out);

    // verify-scheme
    auto* c_verify = app.add_subcommand("verify-scheme", "check an unlabeled compression scheme");
    c_verify->add_option("--class", opt_class)->required();
    c_verify->add_option("--rep", opt_rep)->required();

    // sweep
    auto* c_sweep = app.add_subcommand("sweep", "corner-peel an arrangement by a generic sweep");
    c_sweep->add_option("--arrangement", opt_arrangement)->required();
    c_sweep->add_option("--out", opt_out);
    c_sweep->add_option("--svg", opt_svg);
    c_sweep->add_option("--cells-out", opt_cells_out);
    c_sweep->add_option("--seed", opt_seed);
    c_sweep->add_option("--direction", opt_direction);
    c_sweep->add_flag("--force", opt_force);

    // fixtures
    auto* c_fixtures = app.add_subcommand("fixtures", "bundled classes and label tables");
    auto* f_list = c_fixtures->add_subcommand("list", "names and descriptions");
    auto* f_export = c_fixtures->add_subcommand("export", "write fixture files");
    std::string fixture_name, fixture_dir = ".";
    f_export->add_option("--name", fixture_name);
    f_export->add_option("--dir", fixture_dir);
    c_fixtures->require_subcommand(1);

    app.parse(argc, argv);

    if (*c_construct) {
        if (opt_n > 8 && !opt_force)
            throw input_error("guarded", "construct refuses n > 8 without --force");
        auto classes = construct_maximum_classes(opt_n, opt_d);
        json j = json::array();
        for (const ConceptClass& cls : classes) {
            json e;
            e["n"] = cls.n();
            e["concepts"] = json::array();
            for (Mask m : cls.concepts()) e["concepts"].push_back(concept_to_string(m, cls.n()));
            j.push_back(e);
        }
        emit(j.dump(2) + "\n", opt_out);
    } else if (*c_analyze) {
        std::vector<std::future<json>> futures;
        for (const std::string& path : analyze_files) {
            auto task = [path, opt_budget]() {
                json j = analyze_class(read_class_file(path), opt_budget);
                j["file"] = path;
                return j;
            };
            if (opt_jobs > 1)
                futures.push_back(std::async(std::launch::async, task));
            else
                futures.push_back(std::async(std::launch::deferred, task));
        }
        json all = json::array();
        for (auto& f : futures) all.push_back(f.get());
        emit((analyze_files.size() == 1 ? all[0].dump(2) : all.dump(2)) + "\n", opt_out);
        if (!opt_edges_out.empty() || !opt_dot_out.empty()) {
            OneInclusionGraph g = build_graph(read_class_file(analyze_files.at(0)));
            if (!opt_edges_out.empty()) write_file(opt_edges_out, edge_list_text(g));
            if (!opt_dot_out.empty()) write_file(opt_dot_out, graph_to_dot(g));
        }
    } else if (*c_peel) {
        ConceptClass cls = read_class_file(opt_class);
        if (opt_mode == "min") {
            emit(peeling_to_json(min_peel(cls)), opt_out);
        } else {
            auto seq = corner_peel(cls);
            if (!seq)
                throw verification_error("not-corner-peelable",
                                         "exhaustive search found no corner-peeling order");
            emit(peeling_to_json(*seq), opt_out);
        }
    } else if (*c_compress) {
        ConceptClass cls = read_class_file(opt_class);
        RepresentationMap rep = read_rep_file(opt_rep);
        LabeledSample sample = parse_sample(opt_sample, cls.n());
        ColorSet keep = compress(sample, cls, rep);
        json j;
        j["sample"] = opt_sample;
        j["keep"] = colorset_indices(keep);
        j["concept"] = concept_to_string(reconstruct(keep, rep), cls.n());
        emit(j.dump(2) + "\n", opt_out);
    } else if (*c_verify) {
        ConceptClass cls = read_class_file(opt_class);
        RepresentationMap rep = read_rep_file(opt_rep);
        ClashWitness clash = check_non_clashing(cls, rep);
        if (!clash.ok)
            throw verification_error(
                "clashing", "representatives clash",
                concept_to_string(clash.first, cls.n()) + "," +
                    concept_to_string(clash.second, cls.n()));
        OrientationReport orient = is_acyclic(cls, rep);
        json j;
        j["non_clashing"] = true;
        j["scheme_size"] = rep.scheme_size();
        j["acyclic"] = orient.acyclic;
        j["orientation_anomalies"] = orient.anomalies.size();
        emit(j.dump(2) + "\n", opt_out);
    } else if (*c_sweep) {
        Arrangement a = read_arrangement_file(opt_arrangement);
        if (a.n() > 10 && !opt_force)
            throw input_error("guarded", "sweep refuses more than 10 planes without --force");
        auto dir = parse_direction(opt_direction);
        PeelingSequence seq = a.kind == GeometryKind::euclidean
                                  ? sweep(a, dir, opt_seed)
                                  : sweep_klein(a, dir, opt_seed);
        emit(peeling_to_json(seq), opt_out);
        if (!opt_cells_out.empty() || !opt_svg.empty()) {
            CellEnumeration enumeration = cells(a);
            if (!opt_cells_out.empty()) write_file(opt_cells_out, class_to_json(enumeration.cls));
            if (!opt_svg.empty()) write_sweep_svgs(a, enumeration, seq, opt_svg);
        }
    } else if (*c_fixtures) {
        if (*f_list) {
            json j = json::array();
            for (const Fixture& f : fixtures())
                j.push_back({{"name", f.name},
                             {"description", f.description},
                             {"has_rep", f.rep.has_value()}});
            emit(j.dump(2) + "\n", opt_out);
        } else if (*f_export) {
            for (const Fixture& f : fixtures()) {
                if (!fixture_name.empty() && f.name != fixture_name) continue;
                write_file(fixture_dir + "/" + f.name + ".txt", class_to_text(f.cls, false));
                if (f.rep) write_file(fixture_dir + "/" + f.name + ".rep.json", rep_to_json(*f.rep));
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        json j{{"code", "bad-usage"}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        json j{{"code", e.code}, {"message", e.what()}};
        if (!e.witness.empty()) j["witness"] = e.witness;
        std::cout << j.dump() << "\n";
        return e.exit_status;
    } catch (const std::exception& e) {
        json j{{"code", "internal"}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
        return 3;
    }
}
