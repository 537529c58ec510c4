#include "curvata/curvature.hpp"

#include <algorithm>

namespace curvata {

std::vector<LengthViolation> validate_length_function(const LengthComplex& x) {
    std::vector<LengthViolation> out;
    const Rational zero(0), half(1, 2), one(1);
    for (const auto& [e, l] : x.lengths()) {
        if (l < zero || l > half)
            out.push_back({LengthViolation::Kind::EdgeOutOfRange,
                           {e.first, e.second},
                           "length " + l.str() + " outside [0, 1/2]"});
    }
    for (const auto& f : x.complex().faces_of_dim(2)) {
        Rational a = x.length(f[0], f[1]);
        Rational b = x.length(f[0], f[2]);
        Rational c = x.length(f[1], f[2]);
        if (a + b + c > one)
            out.push_back({LengthViolation::Kind::TriangleSum, f,
                           "edge lengths sum to " + (a + b + c).str() + " > 1"});
        if (a > b + c || b > a + c || c > a + b)
            out.push_back({LengthViolation::Kind::TriangleInequality, f,
                           "one edge longer than the other two combined"});
    }
    return out;
}

Rational vertex_curvature(const LengthComplex& x, const Vertex& v) {
    if (!x.complex().has_vertex(v)) throw Error("VertexNotFound", v);
    SimplicialComplex lk = x.complex().link({v});
    Rational sum;
    for (const auto& e : lk.edges()) sum += x.length(e.first, e.second);
    return Rational(2) - Rational(lk.euler_characteristic()) - sum;
}

Rational face_curvature(const LengthComplex& x, const Simplex& f) {
    if (f.size() != 3 || !x.complex().contains(f))
        throw Error("FaceNotFound", "not a 2-simplex of the complex");
    return x.length(f[0], f[1]) + x.length(f[0], f[2]) + x.length(f[1], f[2]) -
           Rational(1);
}

namespace {

// A single path or a single cycle; this is what vertex links of a compact
// surface with boundary look like.
bool is_path_or_cycle(const SimplicialComplex& g) {
    auto verts = g.vertices();
    if (verts.empty()) return false;
    if (g.dimension() > 1) return false;
    auto adj = g.adjacency();
    int deg1 = 0;
    for (const auto& [v, nbrs] : adj) {
        if (nbrs.size() > 2 || nbrs.empty()) return false;
        if (nbrs.size() == 1) ++deg1;
    }
    if (deg1 != 0 && deg1 != 2) return false;
    // connectivity
    std::set<Vertex> seen;
    std::vector<Vertex> stack{verts.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (const auto& w : adj.at(v)) stack.push_back(w);
    }
    return seen.size() == verts.size();
}

} // namespace

CurvatureReport gauss_bonnet(const LengthComplex& x) {
    const auto& cx = x.complex();
    if (cx.dimension() > 2)
        throw Error("NotASurface", "simplex of dimension > 2 present");
    std::map<EdgeKey, int> edge_faces;
    for (const auto& e : cx.edges()) edge_faces[e] = 0;
    for (const auto& f : cx.faces_of_dim(2)) {
        ++edge_faces[make_edge(f[0], f[1])];
        ++edge_faces[make_edge(f[0], f[2])];
        ++edge_faces[make_edge(f[1], f[2])];
    }
    for (const auto& [e, n] : edge_faces)
        if (n > 2)
            throw Error("NotASurface",
                        "edge " + e.first + "-" + e.second + " lies in " +
                            std::to_string(n) + " triangles");
    for (const auto& v : cx.vertices())
        if (!is_path_or_cycle(cx.link({v})))
            throw Error("NotASurface", "link of vertex " + v + " is not a path or cycle");

    CurvatureReport rep;
    for (const auto& v : cx.vertices()) {
        Rational k = vertex_curvature(x, v);
        rep.total += k;
        rep.vertex_curvatures.emplace(v, k);
    }
    for (const auto& f : cx.faces_of_dim(2)) {
        Rational k = face_curvature(x, f);
        rep.total += k;
        rep.face_curvatures.emplace(f, k);
    }
    rep.euler2 = Rational(2 * cx.euler_characteristic());
    rep.residual = rep.total - rep.euler2;
    return rep;
}

} // namespace curvata
