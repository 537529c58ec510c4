#include "curvata/artin.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace curvata {

void DefiningGraph::add_edge(const Vertex& s, const Vertex& t, int label) {
    if (label < 2)
        throw Error("LabelTooSmall", "label " + std::to_string(label) + " on " + s + "-" + t);
    EdgeKey e = make_edge(s, t);
    auto it = edges_.find(e);
    if (it != edges_.end() && it->second != label)
        throw Error("ConflictingLabel", "edge " + s + "-" + t + " labeled twice");
    edges_.emplace(e, label);
    vertices_.insert(s);
    vertices_.insert(t);
}

std::optional<int> DefiningGraph::label(const Vertex& s, const Vertex& t) const {
    auto it = edges_.find(make_edge(s, t));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
}

bool DefiningGraph::has_edge(const Vertex& s, const Vertex& t) const {
    return s != t && edges_.count(make_edge(s, t)) > 0;
}

DefiningGraph DefiningGraph::induced(const std::set<Vertex>& subset) const {
    DefiningGraph g;
    for (const auto& v : subset)
        if (vertices_.count(v)) g.add_vertex(v);
    for (const auto& [e, m] : edges_)
        if (subset.count(e.first) && subset.count(e.second))
            g.add_edge(e.first, e.second, m);
    return g;
}

std::vector<Simplex> DefiningGraph::triangles() const {
    std::vector<Simplex> out;
    std::vector<Vertex> vs(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!has_edge(vs[i], vs[j])) continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k)
                if (has_edge(vs[i], vs[k]) && has_edge(vs[j], vs[k]))
                    out.push_back({vs[i], vs[j], vs[k]});
        }
    return out;
}

DefiningGraph parse_defining_graph(const std::string& text) {
    DefiningGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string s, t, m;
        if (!(ls >> s)) continue;
        if (s == "vertex") {
            if (!(ls >> t))
                throw Error("ParseError", "line " + std::to_string(lineno) + ": vertex name missing");
            g.add_vertex(t);
            continue;
        }
        if (!(ls >> t >> m))
            throw Error("ParseError",
                        "line " + std::to_string(lineno) + ": expected 's t m'");
        std::string extra;
        if (ls >> extra)
            throw Error("ParseError", "line " + std::to_string(lineno) + ": trailing tokens");
        if (s == t)
            throw Error("LoopEdge", "line " + std::to_string(lineno) + ": loop at " + s);
        if (m == "inf") { // equivalent to omitting the line
            g.add_vertex(s);
            g.add_vertex(t);
            continue;
        }
        int label = 0;
        try {
            std::size_t pos = 0;
            label = std::stoi(m, &pos);
            if (pos != m.size()) throw std::invalid_argument(m);
        } catch (const std::logic_error&) {
            throw Error("ParseError", "line " + std::to_string(lineno) + ": bad label '" + m + "'");
        }
        g.add_edge(s, t, label);
    }
    return g;
}

TwoDimResult is_two_dimensional(const DefiningGraph& g) {
    for (const auto& tri : g.triangles()) {
        Rational sum = Rational(1, *g.label(tri[0], tri[1])) +
                       Rational(1, *g.label(tri[0], tri[2])) +
                       Rational(1, *g.label(tri[1], tri[2]));
        if (sum > Rational(1)) return {false, tri};
    }
    return {};
}

TwoTwoFreeResult is_22_free(const DefiningGraph& g) {
    for (const auto& v : g.vertices()) {
        int twos = 0;
        for (const auto& [e, m] : g.edges())
            if (m == 2 && (e.first == v || e.second == v)) ++twos;
        if (twos >= 2) return {false, v};
    }
    return {};
}

namespace {

void validate_prime_labels(const DefiningGraph& g, const PrimeLabeling& pl) {
    for (const auto& [e, mp] : pl) {
        if (mp != 2 && mp != 3 && mp != 4 && mp != 6)
            throw Error("InternalInvariantViolation", "m' outside {2,3,4,6}");
        if (mp > *g.label(e.first, e.second))
            throw Error("InternalInvariantViolation", "m' exceeds m on " + e.first + "-" + e.second);
    }
    for (const auto& tri : g.triangles()) {
        Rational a(1, pl.at(make_edge(tri[0], tri[1])));
        Rational b(1, pl.at(make_edge(tri[0], tri[2])));
        Rational c(1, pl.at(make_edge(tri[1], tri[2])));
        if (a + b + c > Rational(1))
            throw Error("InternalInvariantViolation", "m' triangle sum exceeds 1");
        if (a > b + c || b > a + c || c > a + b)
            throw Error("InternalInvariantViolation", "m' triangle inequality fails");
    }
}

} // namespace

PrimeLabeling derive_prime_labels(const DefiningGraph& g) {
    auto dim = is_two_dimensional(g);
    if (!dim.two_dimensional)
        throw Error("PreconditionFailed", "graph is not two-dimensional");
    auto ttf = is_22_free(g);
    if (!ttf.free)
        throw Error("PreconditionFailed", "graph has two consecutive 2-labeled edges");

    auto adjacent_to_two = [&](const EdgeKey& e) {
        for (const auto& [f, m] : g.edges()) {
            if (m != 2 || f == e) continue;
            if (f.first == e.first || f.first == e.second || f.second == e.first ||
                f.second == e.second)
                return true;
        }
        return false;
    };
    auto in_triangle_with_2_and_3 = [&](const EdgeKey& e) {
        for (const auto& v : g.vertices()) {
            if (v == e.first || v == e.second) continue;
            auto a = g.label(v, e.first);
            auto b = g.label(v, e.second);
            if (!a || !b) continue;
            if ((*a == 2 && *b == 3) || (*a == 3 && *b == 2)) return true;
        }
        return false;
    };

    PrimeLabeling pl;
    for (const auto& [e, m] : g.edges()) {
        int mp;
        if (m == 2)
            mp = 2;
        else if (m == 3)
            mp = 3;
        else if (!adjacent_to_two(e))
            mp = 3;
        else if (in_triangle_with_2_and_3(e))
            mp = 6;
        else
            mp = 4;
        pl.emplace(e, mp);
    }
    validate_prime_labels(g, pl);
    return pl;
}

std::optional<Rational> edge_type_length(const PrimeLabeling& pl, const Vertex& s,
                                         const Vertex& t) {
    auto it = pl.find(make_edge(s, t));
    if (it == pl.end()) return std::nullopt;
    return Rational(1, it->second);
}

namespace {

// Connected components of the subgraph of odd-labeled edges.
std::map<Vertex, int> odd_components(const DefiningGraph& g) {
    std::map<Vertex, int> comp;
    std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
    std::map<Vertex, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    std::vector<int> parent(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [e, m] : g.edges())
        if (m % 2 == 1) parent[find(index[e.first])] = find(index[e.second]);
    for (std::size_t i = 0; i < vs.size(); ++i) comp[vs[i]] = find(static_cast<int>(i));
    return comp;
}

} // namespace

ConjugacyStability conjugacy_stable(const DefiningGraph& g, const std::set<Vertex>& subset) {
    auto dim = is_two_dimensional(g);
    if (!dim.two_dimensional)
        throw Error("HypothesisViolated", "graph is not two-dimensional");
    auto ttf = is_22_free(g);
    if (!ttf.free)
        throw Error("HypothesisViolated", "graph has two consecutive 2-labeled edges");
    for (const auto& v : subset)
        if (!g.vertices().count(v))
            throw Error("VertexNotFound", "subset vertex " + v + " is not in the graph");

    auto full = odd_components(g);
    auto sub = odd_components(g.induced(subset));
    std::vector<Vertex> vs(subset.begin(), subset.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (full.at(vs[i]) == full.at(vs[j]) && sub.at(vs[i]) != sub.at(vs[j]))
                return {false, {vs[i], vs[j]}};
    return {};
}

} // namespace curvata
