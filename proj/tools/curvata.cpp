// curvata: exact checks for length complexes, disk diagrams, defining
// graphs, and dihedral Artin balls. JSON on stdout; exit 0 = pass,
// 1 = checked failure, 2 = input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvata/artin.hpp"
#include "curvata/curvature.hpp"
#include "curvata/diagram.hpp"
#include "curvata/dihedral.hpp"
#include "curvata/io.hpp"

using namespace curvata;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

json jrat(const Rational& r) { return r.str(); }

json jcycle(const CycleRef& c) { return c.vertices; }

json jsimplex(const Simplex& s) { return s; }

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::size_t resource_limit() {
    if (const char* v = std::getenv("CURVATA_RESOURCE_LIMIT")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    }
    return 200000;
}

json serialize_violations(const std::vector<LengthViolation>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
        const char* kind = v.kind == LengthViolation::Kind::EdgeOutOfRange
                               ? "edge_out_of_range"
                               : v.kind == LengthViolation::Kind::TriangleSum
                                     ? "triangle_sum"
                                     : "triangle_inequality";
        out.push_back({{"kind", kind}, {"where", v.where}, {"detail", v.detail}});
    }
    return out;
}

json serialize_large(const LargeResult& r) {
    json out{{"large", r.large}};
    switch (r.kind) {
    case LargeResult::Witness::None:
        out["witness"] = nullptr;
        break;
    case LargeResult::Witness::NonFlagClique:
        out["witness"] = {{"kind", "non_flag_clique"}, {"clique", jsimplex(r.clique)}};
        break;
    case LargeResult::Witness::ShortFullCycle:
        out["witness"] = {{"kind", "short_full_cycle"}, {"cycle", jcycle(r.cycle)}};
        break;
    }
    return out;
}

DiskDiagram load_diagram(const std::string& disk_path, const std::string& target_path,
                         const std::string& map_path) {
    DiskDiagram d;
    d.disk = parse_complex(read_file(disk_path));
    d.target = parse_length_complex(read_file(target_path));
    d.vertex_map = parse_vertex_map(read_file(map_path));
    return d;
}

std::string complex_file_body(const SimplicialComplex& x) {
    std::string out;
    // maximal simplices only: those not a face of a larger stored simplex
    for (const auto& s : x.simplices()) {
        bool maximal = true;
        for (const auto& t : x.simplices()) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        out += "simplex";
        for (const auto& v : s) out += " " + v;
        out += "\n";
    }
    return out;
}

int run(const std::vector<std::string>& args, json& report);

int run_corpus(const std::string& dir, json& report) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error("FileNotFound", "not a directory: " + dir);
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        auto name = e.path().filename().string();
        if (name.size() > 12 && name.substr(name.size() - 12) == ".expect.json")
            continue;
        files.push_back(name);
    }
    std::sort(files.begin(), files.end());

    json entries = json::array();
    int passed = 0, failed = 0;
    for (const auto& name : files) {
        auto expect_path = (fs::path(dir) / (name + ".expect.json")).string();
        if (!fs::exists(expect_path))
            throw Error("MissingExpectation", "no expectation for " + name);
        json expect = json::parse(read_file(expect_path));
        std::vector<std::string> args;
        for (const auto& a : expect.at("args")) {
            std::string arg = a.get<std::string>();
            auto resolved = fs::path(dir) / arg;
            if (fs::exists(resolved)) arg = resolved.string();
            args.push_back(arg);
        }
        json sub;
        int code;
        try {
            code = run(args, sub);
        } catch (const Error& e) {
            sub = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
            code = 2;
        }
        bool ok = code == expect.at("exit").get<int>();
        if (ok && expect.contains("result")) ok = sub.value("result", json()) == expect["result"];
        entries.push_back({{"file", name},
                           {"pass", ok},
                           {"expected_exit", expect.at("exit").get<int>()},
                           {"actual_exit", code}});
        (ok ? passed : failed)++;
    }
    report["result"] = {{"files", entries}, {"passed", passed}, {"failed", failed}};
    return failed == 0 ? 0 : 1;
}

int run(const std::vector<std::string>& args, json& report) {
    CLI::App app{"exact geometry of length complexes and 2-dimensional Artin groups",
                 "curvata"};
    app.require_subcommand(1);

    // artin
    auto* artin = app.add_subcommand("artin", "defining-graph analyses");
    artin->require_subcommand(1);
    std::string graph_file, subset_csv;
    auto* analyze = artin->add_subcommand("analyze", "dimension, (2,2)-freeness, labels");
    analyze->add_option("graph", graph_file, "defining graph file")->required();
    auto* conjstab = artin->add_subcommand("conjstab", "conjugacy stability of A_{S'}");
    conjstab->add_option("graph", graph_file, "defining graph file")->required();
    conjstab->add_option("--subset", subset_csv, "comma-separated S'")->required();

    // complex
    auto* complex_cmd = app.add_subcommand("complex", "length-complex checks");
    complex_cmd->require_subcommand(1);
    std::string complex_file;
    int max_edges = 0;
    auto* validate = complex_cmd->add_subcommand("validate", "length-function conditions");
    validate->add_option("complex", complex_file, "complex file")->required();
    auto* large = complex_cmd->add_subcommand("large", "flagness and full-cycle lengths");
    large->add_option("complex", complex_file, "complex file")->required();
    large->add_option("--max-edges", max_edges, "cycle bound override");

    // curvature
    auto* curvature_cmd = app.add_subcommand("curvature", "curvature audit of a surface");
    curvature_cmd->add_option("complex", complex_file, "complex file")->required();

    // diagram
    auto* diagram = app.add_subcommand("diagram", "disk-diagram operations");
    diagram->require_subcommand(1);
    std::string disk_file, target_file, map_file, cycle_csv, from_v, to_v;
    std::string emit_disk, emit_map;
    auto add_diagram_files = [&](CLI::App* sub) {
        sub->add_option("disk", disk_file, "disk complex file")->required();
        sub->add_option("target", target_file, "target complex file")->required();
        sub->add_option("map", map_file, "vertex map file")->required();
    };
    auto* dcheck = diagram->add_subcommand("check", "filling-diagram validity");
    add_diagram_files(dcheck);
    dcheck->add_option("--cycle", cycle_csv, "target cycle (default: boundary image)");
    auto* dreduce = diagram->add_subcommand("reduce", "reduce to a locally large diagram");
    add_diagram_files(dreduce);
    dreduce->add_option("--emit-disk", emit_disk, "write the reduced disk here");
    dreduce->add_option("--emit-map", emit_map, "write the reduced map here");
    auto* dannulus = diagram->add_subcommand("annulus", "boundary annulus and inequality");
    add_diagram_files(dannulus);
    auto* dshortcut = diagram->add_subcommand("shortcut", "shortest path through the disk");
    add_diagram_files(dshortcut);
    dshortcut->add_option("--from", from_v, "start vertex")->required();
    dshortcut->add_option("--to", to_v, "end vertex")->required();

    // dihedral
    auto* dihedral = app.add_subcommand("dihedral", "rank-2 Artin complex balls");
    dihedral->require_subcommand(1);
    int m = 0, radius = 0;
    std::string emit_path, length_str;
    auto* ball_cmd = dihedral->add_subcommand("ball", "build a coset-graph ball");
    ball_cmd->add_option("--m", m, "Coxeter label (0 = infinity)")->required();
    ball_cmd->add_option("--radius", radius, "generator-length radius")->required();
    ball_cmd->add_option("--emit", emit_path, "export as a complex file");
    ball_cmd->add_option("--length", length_str, "edge length for the export");
    auto* girth_cmd = dihedral->add_subcommand("girth", "shortest cycle vs 2m");
    girth_cmd->add_option("--m", m, "Coxeter label (0 = infinity)")->required();
    girth_cmd->add_option("--radius", radius, "generator-length radius")->required();

    // corpus
    auto* corpus = app.add_subcommand("corpus", "run a directory of expectations");
    std::string corpus_dir;
    corpus->add_option("dir", corpus_dir, "corpus directory")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        report = json(); // nothing to print
        return code == 0 ? 0 : 2;
    }

    report = {{"version", kVersion}};

    if (analyze->parsed()) {
        report["command"] = "artin analyze";
        report["inputs"] = {{"graph", graph_file}};
        auto g = parse_defining_graph(read_file(graph_file));
        auto d2 = is_two_dimensional(g);
        auto f22 = is_22_free(g);
        json result{{"two_dimensional", d2.two_dimensional},
                    {"two_two_free", f22.free}};
        json violations = json::array();
        if (!d2.two_dimensional)
            violations.push_back({{"kind", "triangle"}, {"witness", jsimplex(d2.witness)}});
        if (!f22.free)
            violations.push_back({{"kind", "consecutive_2_edges"}, {"witness", f22.witness}});
        if (d2.two_dimensional && f22.free) {
            auto pl = derive_prime_labels(g);
            json labels = json::object();
            for (const auto& [e, mp] : pl)
                labels[e.first + " " + e.second] = mp;
            result["prime_labels"] = labels;
        }
        result["violations"] = violations;
        report["result"] = result;
        return d2.two_dimensional && f22.free ? 0 : 1;
    }

    if (conjstab->parsed()) {
        report["command"] = "artin conjstab";
        report["inputs"] = {{"graph", graph_file}, {"subset", subset_csv}};
        auto g = parse_defining_graph(read_file(graph_file));
        auto names = split_commas(subset_csv);
        std::set<Vertex> subset(names.begin(), names.end());
        for (const auto& v : subset)
            if (!g.vertices().count(v))
                throw Error("ParseError", "subset vertex not in graph: " + v);
        auto r = conjugacy_stable(g, subset);
        json result{{"stable", r.stable}};
        result["witness"] =
            r.stable ? json(nullptr) : json({r.witness.first, r.witness.second});
        report["result"] = result;
        return r.stable ? 0 : 1;
    }

    if (validate->parsed()) {
        report["command"] = "complex validate";
        report["inputs"] = {{"complex", complex_file}};
        auto x = parse_length_complex(read_file(complex_file));
        auto vs = validate_length_function(x);
        report["result"] = {{"ok", vs.empty()}, {"violations", serialize_violations(vs)}};
        return vs.empty() ? 0 : 1;
    }

    if (large->parsed()) {
        report["command"] = "complex large";
        report["inputs"] = {{"complex", complex_file}};
        auto x = parse_length_complex(read_file(complex_file));
        std::optional<int> bound;
        if (max_edges > 0) bound = max_edges;
        auto r = is_large(x, bound);
        auto ll = r.large ? is_locally_large(x, bound) : LocallyLargeResult{};
        json result = serialize_large(r);
        if (r.large) {
            result["locally_large"] = ll.locally_large;
            if (!ll.locally_large) result["link_witness"] = ll.witness;
        }
        report["result"] = result;
        return r.large ? 0 : 1;
    }

    if (curvature_cmd->parsed()) {
        report["command"] = "curvature";
        report["inputs"] = {{"complex", complex_file}};
        auto x = parse_length_complex(read_file(complex_file));
        auto rep = gauss_bonnet(x);
        json vk = json::object(), fk = json::object();
        for (const auto& [v, k] : rep.vertex_curvatures) vk[v] = jrat(k);
        for (const auto& [f, k] : rep.face_curvatures) {
            std::string key;
            for (const auto& v : f) key += (key.empty() ? "" : " ") + v;
            fk[key] = jrat(k);
        }
        report["result"] = {{"vertex_curvatures", vk},
                            {"face_curvatures", fk},
                            {"total", jrat(rep.total)},
                            {"euler2", jrat(rep.euler2)},
                            {"residual", jrat(rep.residual)}};
        return rep.residual == Rational(0) ? 0 : 1;
    }

    if (dcheck->parsed()) {
        report["command"] = "diagram check";
        report["inputs"] = {{"disk", disk_file}, {"target", target_file}, {"map", map_file}};
        auto d = load_diagram(disk_file, target_file, map_file);
        CycleRef sigma;
        if (!cycle_csv.empty()) {
            sigma.vertices = split_commas(cycle_csv);
        } else {
            auto shape = analyze_disk(d.disk);
            if (!shape.valid)
                throw Error("NotADisk", "disk defects; pass --cycle to check anyway");
            for (const auto& v : shape.boundary.vertices) {
                auto it = d.vertex_map.find(v);
                if (it == d.vertex_map.end())
                    throw Error("ParseError", "vertex map misses " + v);
                sigma.vertices.push_back(it->second);
            }
        }
        auto defects = check_filling_diagram(d, sigma);
        report["result"] = {{"ok", defects.empty()}, {"defects", defects},
                            {"cycle", jcycle(sigma)}};
        return defects.empty() ? 0 : 1;
    }

    if (dreduce->parsed()) {
        report["command"] = "diagram reduce";
        report["inputs"] = {{"disk", disk_file}, {"target", target_file}, {"map", map_file}};
        auto d = load_diagram(disk_file, target_file, map_file);
        auto before = d.disk.faces_of_dim(2).size();
        auto r = reduce_to_locally_large(d);
        auto after = r.disk.faces_of_dim(2).size();
        if (!emit_disk.empty()) write_file(emit_disk, complex_file_body(r.disk));
        if (!emit_map.empty()) {
            std::string body;
            for (const auto& [dv, xv] : r.vertex_map) body += "map " + dv + " " + xv + "\n";
            write_file(emit_map, body);
        }
        report["result"] = {{"triangles_before", before},
                            {"triangles_after", after},
                            {"locally_large", is_locally_large(pullback(r)).locally_large}};
        return 0;
    }

    if (dannulus->parsed()) {
        report["command"] = "diagram annulus";
        report["inputs"] = {{"disk", disk_file}, {"target", target_file}, {"map", map_file}};
        auto d = load_diagram(disk_file, target_file, map_file);
        auto a = boundary_annulus(d);
        auto iq = annulus_inequality_check(d);
        report["result"] = {{"outer_length", jrat(iq.outer)},
                            {"inner_length", jrat(iq.inner)},
                            {"holds", iq.holds},
                            {"outer_edges", a.outer_edges.size()},
                            {"inner_edges", a.inner_edges.size()},
                            {"doubled_edge", a.doubled_edge},
                            {"curvature_total", jrat(annulus_curvature_total(a))}};
        return iq.holds ? 0 : 1;
    }

    if (dshortcut->parsed()) {
        report["command"] = "diagram shortcut";
        report["inputs"] = {{"disk", disk_file}, {"target", target_file},
                            {"map", map_file}, {"from", from_v}, {"to", to_v}};
        auto d = load_diagram(disk_file, target_file, map_file);
        auto g = shortcut_search(d, from_v, to_v);
        report["result"] = {{"distance", jrat(g.distance)}, {"path", g.path.vertices}};
        return 0;
    }

    if (ball_cmd->parsed()) {
        report["command"] = "dihedral ball";
        report["inputs"] = {{"m", m}, {"radius", radius}};
        auto ball = build_ball(m, radius, resource_limit());
        report["result"] = {{"nodes", ball.nodes.size()}, {"edges", ball.edges.size()}};
        if (!emit_path.empty()) {
            Rational len = length_str.empty()
                               ? Rational(1, m == 2 || m == 0 ? 2 : 3)
                               : Rational::parse(length_str);
            write_file(emit_path, ball.to_complex_file(len));
            report["result"]["emitted"] = emit_path;
        }
        return 0;
    }

    if (girth_cmd->parsed()) {
        report["command"] = "dihedral girth";
        report["inputs"] = {{"m", m}, {"radius", radius}};
        auto ball = build_ball(m, radius, resource_limit());
        auto g = girth_check(ball, m);
        report["result"] = {{"acyclic", g.acyclic},
                            {"shortest_cycle", g.shortest_cycle},
                            {"bound", g.bound},
                            {"pass", g.pass},
                            {"bound_attained", g.bound_attained},
                            {"nodes", ball.nodes.size()},
                            {"edges", ball.edges.size()}};
        return g.pass ? 0 : 1;
    }

    if (corpus->parsed()) {
        report["command"] = "corpus";
        report["inputs"] = {{"dir", corpus_dir}};
        return run_corpus(corpus_dir, report);
    }

    throw Error("Usage", "no subcommand selected");
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    json report;
    int code;
    try {
        code = run(args, report);
    } catch (const Error& e) {
        report["error"] = {{"code", e.code()}, {"message", e.what()}};
        std::cout << report.dump(2) << "\n";
        static const std::set<std::string> input_errors{
            "ParseError",  "FileNotFound", "FileWriteFailed",  "MissingLength",
            "UnknownEdge", "LoopEdge",     "ConflictingLabel", "LabelTooSmall",
            "EmptyInput",  "DuplicateVertexInSimplex", "MissingExpectation",
            "BadLabel",    "BadRadius",    "Usage",            "NotADisk"};
        return input_errors.count(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!report.is_null()) std::cout << report.dump(2) << "\n";
    return code;
}
