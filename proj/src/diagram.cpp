#include "curvata/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvata {

namespace {

std::string edge_str(const EdgeKey& e) { return e.first + "-" + e.second; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

DiskShape analyze_disk(const SimplicialComplex& disk) {
    DiskShape shape;
    auto& defects = shape.defects;
    if (disk.simplices().empty()) {
        defects.push_back("empty complex");
        return shape;
    }
    if (disk.dimension() != 2)
        defects.push_back("not 2-dimensional");

    auto faces = disk.faces_of_dim(2);
    std::map<EdgeKey, int> edge_faces;
    for (const auto& e : disk.edges()) edge_faces[e] = 0;
    for (const auto& f : faces) {
        ++edge_faces[make_edge(f[0], f[1])];
        ++edge_faces[make_edge(f[0], f[2])];
        ++edge_faces[make_edge(f[1], f[2])];
    }
    std::vector<EdgeKey> boundary_edges;
    for (const auto& [e, n] : edge_faces) {
        if (n == 0) defects.push_back("edge " + edge_str(e) + " lies in no triangle");
        if (n > 2) defects.push_back("edge " + edge_str(e) + " lies in more than two triangles");
        if (n == 1) boundary_edges.push_back(e);
    }
    if (boundary_edges.empty())
        defects.push_back("no boundary edge");
    if (disk.euler_characteristic() != 1)
        defects.push_back("Euler characteristic is not 1");
    if (!defects.empty()) return shape;

    // Boundary edges must close up into a single cycle.
    std::map<Vertex, std::vector<Vertex>> badj;
    for (const auto& [u, v] : boundary_edges) {
        badj[u].push_back(v);
        badj[v].push_back(u);
    }
    for (auto& [v, nbrs] : badj) {
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.size() != 2) {
            defects.push_back("boundary is not a 1-manifold at " + v);
            return shape;
        }
    }
    std::vector<Vertex> cyc{badj.begin()->first};
    cyc.push_back(badj.at(cyc[0])[0]);
    while (cyc.back() != cyc.front()) {
        const auto& nbrs = badj.at(cyc.back());
        const Vertex& prev = cyc[cyc.size() - 2];
        cyc.push_back(nbrs[0] == prev ? nbrs[1] : nbrs[0]);
    }
    cyc.pop_back();
    if (cyc.size() != boundary_edges.size()) {
        defects.push_back("boundary has more than one component");
        return shape;
    }

    // Interior vertex links must be cycles, boundary vertex links paths; both
    // follow from the counts above plus link connectivity, which we check via
    // triangle fans.
    for (const auto& v : disk.vertices()) {
        SimplicialComplex lk = disk.link({v});
        auto ladj = lk.adjacency();
        std::set<Vertex> seen;
        std::vector<Vertex> stack{ladj.begin()->first};
        while (!stack.empty()) {
            Vertex w = stack.back();
            stack.pop_back();
            if (!seen.insert(w).second) continue;
            for (const auto& z : ladj.at(w)) stack.push_back(z);
        }
        if (seen.size() != ladj.size()) {
            defects.push_back("link of " + v + " is disconnected");
            return shape;
        }
    }
    shape.valid = true;
    shape.boundary = {cyc};
    return shape;
}

LengthComplex pullback(const DiskDiagram& d) {
    std::map<EdgeKey, Rational> lengths;
    for (const auto& e : d.disk.edges()) {
        const Vertex& iu = d.vertex_map.at(e.first);
        const Vertex& iv = d.vertex_map.at(e.second);
        if (iu == iv)
            throw Error("DegenerateEdge",
                        "edge " + edge_str(e) + " maps to the single vertex " + iu);
        lengths.emplace(e, d.target.length(iu, iv));
    }
    return LengthComplex(d.disk, std::move(lengths));
}

std::vector<std::string> check_filling_diagram(const DiskDiagram& d, const CycleRef& sigma) {
    std::vector<std::string> defects;
    DiskShape shape = analyze_disk(d.disk);
    for (const auto& s : shape.defects) defects.push_back("disk: " + s);

    for (const auto& v : d.disk.vertices()) {
        if (!d.vertex_map.count(v)) {
            defects.push_back("vertex " + v + " has no image");
        } else if (!d.target.complex().has_vertex(d.vertex_map.at(v))) {
            defects.push_back("image of " + v + " is not a target vertex");
        }
    }
    if (!defects.empty()) return defects;

    for (const auto& s : d.disk.simplices()) {
        std::set<Vertex> image;
        for (const auto& v : s) image.insert(d.vertex_map.at(v));
        if (image.size() < s.size()) {
            std::string names;
            for (const auto& v : s) names += (names.empty() ? "" : ",") + v;
            defects.push_back("degenerate simplex {" + names + "}");
            continue;
        }
        Simplex img(image.begin(), image.end());
        if (!d.target.complex().contains(img))
            defects.push_back("image of a simplex is not a simplex of the target");
    }

    if (shape.valid) {
        std::vector<Vertex> bimg;
        std::set<Vertex> distinct;
        for (const auto& v : shape.boundary.vertices) {
            bimg.push_back(d.vertex_map.at(v));
            distinct.insert(bimg.back());
        }
        if (distinct.size() != bimg.size() ||
            canonical_cycle(bimg) != canonical_cycle(sigma.vertices))
            defects.push_back("boundary does not map isomorphically onto the cycle");
    }
    return defects;
}

namespace {

std::string fill_vertex_name(std::size_t i) {
    std::ostringstream os;
    os << "p";
    if (i < 10) os << "00";
    else if (i < 100) os << "0";
    os << i;
    return os.str();
}

// Recursive diagonal split over positions into sigma.
void fill_recurse(const SimplicialComplex& x, const std::vector<Vertex>& sigma,
                  const std::vector<std::size_t>& cyc, std::vector<Simplex>& triangles) {
    const std::size_t n = cyc.size();
    if (n == 3) {
        Simplex img = make_simplex({sigma[cyc[0]], sigma[cyc[1]], sigma[cyc[2]]});
        if (!x.contains(img))
            throw Error("NotFlag", "triangle " + img[0] + "," + img[1] + "," + img[2] +
                                       " is not spanned in the target");
        triangles.push_back(make_simplex(
            {fill_vertex_name(cyc[0]), fill_vertex_name(cyc[1]), fill_vertex_name(cyc[2])}));
        return;
    }
    // Lexicographically least diagonal by target endpoint pair.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    EdgeKey best_key;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue; // consecutive around the wrap
            if (!x.has_edge(sigma[cyc[i]], sigma[cyc[j]])) continue;
            EdgeKey key = make_edge(sigma[cyc[i]], sigma[cyc[j]]);
            if (!best || key < best_key) {
                best = {i, j};
                best_key = key;
            }
        }
    }
    if (!best)
        throw Error("NoDiagonal", "cycle is full, no diagonal available");
    auto [i, j] = *best;
    std::vector<std::size_t> left(cyc.begin() + i, cyc.begin() + j + 1);
    std::vector<std::size_t> right(cyc.begin() + j, cyc.end());
    right.insert(right.end(), cyc.begin(), cyc.begin() + i + 1);
    fill_recurse(x, sigma, left, triangles);
    fill_recurse(x, sigma, right, triangles);
}

void require_cycle(const SimplicialComplex& x, const CycleRef& sigma) {
    const auto& vs = sigma.vertices;
    if (vs.size() < 3)
        throw Error("BadCycle", "a cycle needs at least 3 vertices");
    if (std::set<Vertex>(vs.begin(), vs.end()).size() != vs.size())
        throw Error("BadCycle", "cycle vertices are not distinct");
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!x.has_edge(vs[i], vs[(i + 1) % vs.size()]))
            throw Error("BadCycle",
                        "missing edge " + vs[i] + "-" + vs[(i + 1) % vs.size()]);
}

} // namespace

DiskDiagram fill_no_interior(const LengthComplex& x, const CycleRef& sigma) {
    require_cycle(x.complex(), sigma);
    std::vector<std::size_t> cyc(sigma.vertices.size());
    std::iota(cyc.begin(), cyc.end(), 0);
    std::vector<Simplex> triangles;
    fill_recurse(x.complex(), sigma.vertices, cyc, triangles);

    DiskDiagram d;
    d.disk = SimplicialComplex::from_maximal(triangles);
    d.target = x;
    for (std::size_t i = 0; i < sigma.vertices.size(); ++i)
        d.vertex_map[fill_vertex_name(i)] = sigma.vertices[i];
    return d;
}

namespace {

std::vector<Simplex> disk_triangles(const SimplicialComplex& disk) {
    return disk.faces_of_dim(2);
}

DiskDiagram rebuild(const std::vector<Simplex>& triangles, const LengthComplex& target,
                    const std::map<Vertex, Vertex>& vmap) {
    DiskDiagram d;
    d.disk = SimplicialComplex::from_maximal(triangles);
    d.target = target;
    for (const auto& v : d.disk.vertices()) d.vertex_map[v] = vmap.at(v);
    return d;
}

// Orders the link of an interior vertex into a cycle.
std::vector<Vertex> link_cycle(const SimplicialComplex& disk, const Vertex& v) {
    SimplicialComplex lk = disk.link({v});
    auto adj = lk.adjacency();
    std::vector<Vertex> cyc{adj.begin()->first};
    cyc.push_back(adj.at(cyc[0])[0]);
    while (true) {
        const auto& nbrs = adj.at(cyc.back());
        if (nbrs.size() != 2)
            throw Error("BadLink", "link of " + v + " is not a cycle");
        const Vertex& prev = cyc[cyc.size() - 2];
        Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        if (next == cyc.front()) break;
        cyc.push_back(next);
    }
    if (cyc.size() != adj.size())
        throw Error("BadLink", "link of " + v + " is not a single cycle");
    return cyc;
}

} // namespace

DiskDiagram reduce_to_locally_large(const DiskDiagram& input) {
    DiskDiagram cur = input;
    while (true) {
        DiskShape shape = analyze_disk(cur.disk);
        if (!shape.valid)
            throw Error("InvalidDisk", shape.defects.front());
        std::set<Vertex> on_boundary(shape.boundary.vertices.begin(),
                                     shape.boundary.vertices.end());
        auto triangles = disk_triangles(cur.disk);
        std::size_t before = triangles.size();

        // (a) excise a degenerately mapped edge
        std::optional<EdgeKey> deg;
        for (const auto& e : cur.disk.edges()) {
            if (cur.vertex_map.at(e.first) == cur.vertex_map.at(e.second)) {
                deg = e;
                break; // edges() is sorted, first hit is lex least
            }
        }
        if (deg) {
            std::vector<Simplex> holding;
            std::vector<Simplex> kept;
            for (const auto& t : triangles) {
                bool has = std::binary_search(t.begin(), t.end(), deg->first) &&
                           std::binary_search(t.begin(), t.end(), deg->second);
                (has ? holding : kept).push_back(t);
            }
            if (holding.size() != 2)
                throw Error("DegenerateBoundaryEdge",
                            "degenerate edge " + edge_str(*deg) + " is not interior");
            Vertex keep = deg->first, drop = deg->second;
            if (on_boundary.count(drop) || (!on_boundary.count(keep) && drop < keep))
                std::swap(keep, drop);
            if (on_boundary.count(drop))
                throw Error("DegenerateBoundaryEdge",
                            "both endpoints of " + edge_str(*deg) + " are on the boundary");
            std::set<Simplex> renamed;
            for (auto t : kept) {
                for (auto& v : t)
                    if (v == drop) v = keep;
                t = make_simplex(t);
                if (!renamed.insert(t).second)
                    throw Error("ReductionConflict", "excision produced duplicate triangles");
            }
            cur = rebuild({renamed.begin(), renamed.end()}, cur.target, cur.vertex_map);
            if (disk_triangles(cur.disk).size() != before - 2)
                throw Error("ReductionConflict", "excision did not remove two triangles");
            continue;
        }

        // (b) replace the star of an interior vertex with a short link
        bool replaced = false;
        for (const auto& v : cur.disk.vertices()) {
            if (on_boundary.count(v)) continue;
            std::vector<Vertex> lk = link_cycle(cur.disk, v);
            Rational len;
            for (std::size_t i = 0; i < lk.size(); ++i)
                len += cur.target.length(cur.vertex_map.at(lk[i]),
                                         cur.vertex_map.at(lk[(i + 1) % lk.size()]));
            if (len >= Rational(2)) continue;

            std::vector<Vertex> img;
            std::set<Vertex> distinct;
            for (const auto& w : lk) {
                img.push_back(cur.vertex_map.at(w));
                distinct.insert(img.back());
            }
            if (distinct.size() != img.size())
                throw Error("LinkImageNotSimple",
                            "link image of " + v + " is not an embedded cycle");
            LengthComplex lx = cur.target.vertex_link(cur.vertex_map.at(v));
            DiskDiagram fill;
            try {
                fill = fill_no_interior(lx, {img});
            } catch (const Error& e) {
                if (e.code() == "NoDiagonal" || e.code() == "NotFlag")
                    throw Error("TargetNotLocallyLarge",
                                "cannot fill the link image of " + v + ": " + e.what());
                throw;
            }
            // Translate the fill back onto the link vertices of the disk.
            std::map<Vertex, Vertex> back;
            for (std::size_t i = 0; i < lk.size(); ++i)
                back[fill_vertex_name(i)] = lk[i];
            std::vector<Simplex> patched;
            for (const auto& t : triangles)
                if (!std::binary_search(t.begin(), t.end(), v)) patched.push_back(t);
            for (const auto& t : disk_triangles(fill.disk)) {
                Simplex s = make_simplex({back.at(t[0]), back.at(t[1]), back.at(t[2])});
                // new diagonals must not collide with existing disk edges
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        bool consecutive = false;
                        for (std::size_t k = 0; k < lk.size(); ++k) {
                            auto e = make_edge(lk[k], lk[(k + 1) % lk.size()]);
                            if (e == make_edge(s[i], s[j])) consecutive = true;
                        }
                        if (!consecutive && cur.disk.has_edge(s[i], s[j]))
                            throw Error("ReductionConflict",
                                        "replacement diagonal already exists in the disk");
                    }
                patched.push_back(s);
            }
            cur = rebuild(patched, cur.target, cur.vertex_map);
            if (disk_triangles(cur.disk).size() >= before)
                throw Error("ReductionConflict", "replacement did not shrink the diagram");
            replaced = true;
            break;
        }
        if (!replaced) break;
    }
    return cur;
}

BoundaryAnnulus boundary_annulus(const DiskDiagram& d) {
    DiskShape shape = analyze_disk(d.disk);
    if (!shape.valid)
        throw Error("InvalidDisk", shape.defects.front());
    LengthComplex pl = pullback(d);
    const auto& boundary = shape.boundary.vertices;
    std::set<Vertex> on_boundary(boundary.begin(), boundary.end());

    std::size_t interior =
        d.disk.vertices().size() - boundary.size();
    if (interior < 2)
        throw Error("TooFewInteriorVertices",
                    "boundary complex needs at least two interior vertices");

    std::set<EdgeKey> boundary_edge_set;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        boundary_edge_set.insert(
            make_edge(boundary[i], boundary[(i + 1) % boundary.size()]));
    for (const auto& e : d.disk.edges())
        if (on_boundary.count(e.first) && on_boundary.count(e.second) &&
            !boundary_edge_set.count(e))
            throw Error("BoundaryChord",
                        "edge " + edge_str(e) + " joins nonconsecutive boundary vertices");

    // Boundary-layer triangles, each kept as its own closed copy.
    std::vector<Simplex> layer;
    for (const auto& t : d.disk.faces_of_dim(2))
        if (on_boundary.count(t[0]) || on_boundary.count(t[1]) || on_boundary.count(t[2]))
            layer.push_back(t);

    const int F = static_cast<int>(layer.size());
    auto vid = [&](int f, int slot) { return 3 * f + slot; };
    auto slot_of = [&](int f, const Vertex& v) {
        for (int s = 0; s < 3; ++s)
            if (layer[f][s] == v) return s;
        throw Error("Internal", "vertex not in face");
    };
    UnionFind vuf(3 * F), euf(3 * F); // edge slot e = opposite vertex slot

    auto edge_of_slot = [&](int f, int s) {
        return make_edge(layer[f][(s + 1) % 3], layer[f][(s + 2) % 3]);
    };

    std::map<Vertex, std::vector<std::pair<int, int>>> copies; // vertex -> (face, slot)
    for (int f = 0; f < F; ++f)
        for (int s = 0; s < 3; ++s) copies[layer[f][s]].push_back({f, s});
    for (const auto& b : boundary) {
        const auto& cs = copies.at(b);
        for (std::size_t i = 1; i < cs.size(); ++i)
            vuf.unite(vid(cs[0].first, cs[0].second), vid(cs[i].first, cs[i].second));
    }

    // Glue along edges of the boundary layer: edges incident to a boundary
    // vertex, shared by two layer triangles.
    std::map<EdgeKey, std::vector<std::pair<int, int>>> edge_copies; // (face, opposite slot)
    for (int f = 0; f < F; ++f)
        for (int s = 0; s < 3; ++s) edge_copies[edge_of_slot(f, s)].push_back({f, s});
    for (const auto& [e, cs] : edge_copies) {
        if (!on_boundary.count(e.first) && !on_boundary.count(e.second)) continue;
        for (std::size_t i = 1; i < cs.size(); ++i) {
            euf.unite(vid(cs[0].first, cs[0].second), vid(cs[i].first, cs[i].second));
            vuf.unite(vid(cs[0].first, slot_of(cs[0].first, e.first)),
                      vid(cs[i].first, slot_of(cs[i].first, e.first)));
            vuf.unite(vid(cs[0].first, slot_of(cs[0].first, e.second)),
                      vid(cs[i].first, slot_of(cs[i].first, e.second)));
        }
    }

    BoundaryAnnulus a;
    // Vertex classes, deterministically named.
    std::map<int, int> vclass; // uf root -> class id
    std::map<Vertex, std::vector<int>> roots_of; // disk vertex -> sorted roots
    for (int f = 0; f < F; ++f)
        for (int s = 0; s < 3; ++s) {
            int r = vuf.find(vid(f, s));
            auto& rs = roots_of[layer[f][s]];
            if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
        }
    for (auto& [v, rs] : roots_of) {
        std::sort(rs.begin(), rs.end());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            vclass[rs[i]] = static_cast<int>(a.vertex_names.size());
            a.vertex_names.push_back(rs.size() == 1 ? v
                                                    : v + "#" + std::to_string(i + 1));
        }
    }

    std::map<int, int> eclass; // uf root -> edge id
    for (int f = 0; f < F; ++f)
        for (int s = 0; s < 3; ++s) {
            int r = euf.find(vid(f, s));
            if (eclass.count(r)) continue;
            EdgeKey de = edge_of_slot(f, s);
            BoundaryAnnulus::AEdge ae;
            ae.a = vclass.at(vuf.find(vid(f, (s + 1) % 3)));
            ae.b = vclass.at(vuf.find(vid(f, (s + 2) % 3)));
            if (ae.a > ae.b) std::swap(ae.a, ae.b);
            ae.len = pl.length(de.first, de.second);
            ae.disk_edge = de;
            eclass[r] = static_cast<int>(a.edges.size());
            a.edges.push_back(ae);
        }

    std::vector<int> face_count(a.edges.size(), 0);
    for (int f = 0; f < F; ++f) {
        BoundaryAnnulus::AFace af;
        for (int s = 0; s < 3; ++s) {
            af.verts[s] = vclass.at(vuf.find(vid(f, s)));
            af.edge_ids[s] = eclass.at(euf.find(vid(f, s)));
            ++face_count[af.edge_ids[s]];
        }
        af.disk_face = layer[f];
        a.faces.push_back(af);
    }

    // Split the free edges into the outer cycle (over dD) and the inner one.
    std::vector<int> outer_set, inner_set;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if (face_count[i] != 1) continue;
        if (boundary_edge_set.count(a.edges[i].disk_edge))
            outer_set.push_back(static_cast<int>(i));
        else
            inner_set.push_back(static_cast<int>(i));
    }

    auto walk = [&](const std::vector<int>& eset, std::vector<int>& vout,
                    std::vector<int>& eout) {
        std::map<int, std::vector<int>> inc;
        for (int e : eset) {
            inc[a.edges[e].a].push_back(e);
            inc[a.edges[e].b].push_back(e);
        }
        for (const auto& [v, es] : inc)
            if (es.size() != 2)
                throw Error("NotAnnulus", "boundary component is not a cycle");
        int start = inc.begin()->first;
        for (const auto& [v, es] : inc)
            if (a.vertex_names[v] < a.vertex_names[start]) start = v;
        std::set<int> used;
        int cur = start;
        while (true) {
            vout.push_back(cur);
            int nextE = -1;
            for (int e : inc.at(cur))
                if (!used.count(e)) { nextE = e; break; }
            if (nextE < 0) break;
            used.insert(nextE);
            eout.push_back(nextE);
            cur = a.edges[nextE].a == cur ? a.edges[nextE].b : a.edges[nextE].a;
            if (cur == start) break;
        }
        if (used.size() != eset.size())
            throw Error("NotAnnulus", "boundary component is not connected");
    };
    walk(outer_set, a.outer_vertices, a.outer_edges);
    walk(inner_set, a.inner_vertices, a.inner_edges);

    std::set<std::pair<int, int>> pairs;
    for (const auto& e : a.edges)
        if (!pairs.insert({e.a, e.b}).second) a.doubled_edge = true;
    return a;
}

Rational BoundaryAnnulus::outer_length() const {
    Rational sum;
    for (int e : outer_edges) sum += edges[e].len;
    return sum;
}

Rational BoundaryAnnulus::inner_length() const {
    Rational sum;
    for (int e : inner_edges) sum += edges[e].len;
    return sum;
}

Rational annulus_curvature_total(const BoundaryAnnulus& a) {
    Rational total;
    for (const auto& f : a.faces) {
        Rational k(-1);
        for (int e : f.edge_ids) k += a.edges[e].len;
        total += k;
    }
    // Every vertex of the annulus is a boundary vertex: chi(link) = 1, so
    // kappa(v) = 1 - sum of its link edge lengths.
    std::vector<std::set<int>> link_edges(a.vertex_names.size());
    for (const auto& f : a.faces)
        for (int s = 0; s < 3; ++s) link_edges[f.verts[s]].insert(f.edge_ids[s]);
    for (std::size_t v = 0; v < a.vertex_names.size(); ++v) {
        Rational k(1);
        for (int e : link_edges[v]) k -= a.edges[e].len;
        total += k;
    }
    return total;
}

AnnulusInequality annulus_inequality_check(const DiskDiagram& d) {
    BoundaryAnnulus a = boundary_annulus(d);
    AnnulusInequality r;
    r.outer = a.outer_length();
    r.inner = a.inner_length();
    r.holds = r.outer >= r.inner + Rational(2);
    return r;
}

Geodesic shortcut_search(const DiskDiagram& d, const Vertex& u, const Vertex& v) {
    return geodesic_distance(pullback(d), u, v);
}

} // namespace curvata
