#include "curvata/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace curvata {

namespace {

struct ParsedComplex {
    std::vector<Simplex> maximal;
    std::map<EdgeKey, Rational> lengths;
    std::optional<Rational> default_length;
};

ParsedComplex parse_lines(const std::string& text) {
    ParsedComplex out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& msg) -> Error {
            return Error("ParseError", "line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "simplex") {
            std::vector<Vertex> verts;
            Vertex v;
            while (ls >> v) verts.push_back(v);
            if (verts.empty()) throw fail("simplex needs at least one vertex");
            out.maximal.push_back(make_simplex(verts));
        } else if (kw == "length") {
            Vertex u, v;
            std::string r;
            if (!(ls >> u >> v >> r)) throw fail("expected 'length u v p/q'");
            out.lengths[make_edge(u, v)] = Rational::parse(r);
        } else if (kw == "default_length") {
            std::string r;
            if (!(ls >> r)) throw fail("expected 'default_length p/q'");
            out.default_length = Rational::parse(r);
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
    }
    return out;
}

} // namespace

SimplicialComplex parse_complex(const std::string& text) {
    return SimplicialComplex::from_maximal(parse_lines(text).maximal);
}

LengthComplex parse_length_complex(const std::string& text) {
    ParsedComplex p = parse_lines(text);
    SimplicialComplex cx = SimplicialComplex::from_maximal(p.maximal);
    std::map<EdgeKey, Rational> lengths;
    for (const auto& e : cx.edges()) {
        auto it = p.lengths.find(e);
        if (it != p.lengths.end()) {
            lengths.emplace(e, it->second);
        } else if (p.default_length) {
            lengths.emplace(e, *p.default_length);
        } else {
            throw Error("MissingLength", "edge " + e.first + "-" + e.second +
                                             " has no length and no default_length is set");
        }
    }
    for (const auto& [e, l] : p.lengths)
        if (!cx.contains({e.first, e.second}))
            throw Error("UnknownEdge",
                        "length given for " + e.first + "-" + e.second +
                            ", which is not an edge of the complex");
    return LengthComplex(std::move(cx), std::move(lengths));
}

std::map<Vertex, Vertex> parse_vertex_map(const std::string& text) {
    std::map<Vertex, Vertex> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw, d, x;
        if (!(ls >> kw)) continue;
        if (kw != "map" || !(ls >> d >> x))
            throw Error("ParseError",
                        "line " + std::to_string(lineno) + ": expected 'map d_vertex x_vertex'");
        auto [it, fresh] = out.emplace(d, x);
        if (!fresh && it->second != x)
            throw Error("ParseError", "line " + std::to_string(lineno) +
                                          ": conflicting image for " + d);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileNotFound", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("FileWriteFailed", path);
    out << content;
}

} // namespace curvata
