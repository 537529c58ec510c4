#pragma once

// Shared test fixtures: small named complexes, random generators, and the
// independent brute-force oracles the suites check against.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "curvata/artin.hpp"
#include "curvata/complex.hpp"
#include "curvata/dihedral.hpp"

namespace testutil {

using namespace curvata;

inline LengthComplex uniform_complex(const std::vector<Simplex>& maximal,
                                     const Rational& len) {
    SimplicialComplex cx = SimplicialComplex::from_maximal(maximal);
    std::map<EdgeKey, Rational> ls;
    for (const auto& e : cx.edges()) ls.emplace(e, len);
    return LengthComplex(std::move(cx), std::move(ls));
}

inline std::vector<Simplex> octahedron_faces() {
    // opposite pairs: a-f, b-e, c-d
    std::vector<Simplex> out;
    const std::vector<std::pair<Vertex, Vertex>> axes = {{"a", "f"}, {"b", "e"}, {"c", "d"}};
    for (const Vertex& x : {"a", "f"})
        for (const Vertex& y : {"b", "e"})
            for (const Vertex& z : {"c", "d"})
                out.push_back({x, y, z});
    return out;
}

inline std::vector<Simplex> cycle_graph(const std::vector<Vertex>& vs) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out.push_back({vs[i], vs[(i + 1) % vs.size()]});
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force full-cycle oracle: enumerate every simple cycle by DFS, filter
// by fullness directly from the definition. Independent of the chordless DFS
// in the library.
inline std::set<std::vector<Vertex>> brute_full_cycles(const SimplicialComplex& x,
                                                       int max_edges) {
    auto adj = x.adjacency();
    std::set<std::vector<Vertex>> out;
    std::vector<Vertex> verts = x.vertices();
    std::vector<Vertex> path;

    std::function<void(const Vertex&)> dfs = [&](const Vertex& root) {
        const Vertex last = path.back(); // copy: path may reallocate below
        for (const auto& w : adj.at(last)) {
            if (w == root && path.size() >= 3) {
                // candidate cycle; check fullness from scratch
                bool full = true;
                const auto& c = path;
                for (std::size_t i = 0; i < c.size() && full; ++i)
                    for (std::size_t j = i + 1; j < c.size() && full; ++j) {
                        bool consecutive =
                            j == i + 1 || (i == 0 && j == c.size() - 1);
                        if (!consecutive && x.has_edge(c[i], c[j])) full = false;
                    }
                if (full && c.size() == 3) {
                    Simplex tri = c;
                    std::sort(tri.begin(), tri.end());
                    if (x.contains(tri)) full = false;
                }
                if (full) out.insert(canonical_cycle(c));
            }
            if (w <= root) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (static_cast<int>(path.size()) >= max_edges) continue;
            path.push_back(w);
            dfs(root);
            path.pop_back();
        }
    };
    for (const auto& v : verts) {
        path = {v};
        dfs(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random triangulated disks and spheres.
//
// Disks start from one triangle and grow by gluing a new triangle onto a
// random boundary edge or star-subdividing a random face. Spheres start from
// the tetrahedron boundary and star-subdivide.
struct Triangulation {
    std::vector<Simplex> faces;
    int next_vertex = 0;
    Vertex fresh() { return "v" + std::to_string(next_vertex++); }
};

inline std::vector<Simplex> random_disk(std::mt19937& rng, int steps) {
    Triangulation t;
    Vertex a = t.fresh(), b = t.fresh(), c = t.fresh();
    t.faces.push_back(curvata::make_simplex({a, b, c}));
    for (int i = 0; i < steps; ++i) {
        if (rng() % 2 == 0) {
            // star-subdivide a random face
            std::size_t fi = rng() % t.faces.size();
            Simplex f = t.faces[fi];
            t.faces.erase(t.faces.begin() + fi);
            Vertex w = t.fresh();
            t.faces.push_back(curvata::make_simplex({f[0], f[1], w}));
            t.faces.push_back(curvata::make_simplex({f[0], f[2], w}));
            t.faces.push_back(curvata::make_simplex({f[1], f[2], w}));
        } else {
            // glue a fresh triangle onto a random boundary edge
            std::map<EdgeKey, int> count;
            for (const auto& f : t.faces) {
                ++count[curvata::make_edge(f[0], f[1])];
                ++count[curvata::make_edge(f[0], f[2])];
                ++count[curvata::make_edge(f[1], f[2])];
            }
            std::vector<EdgeKey> boundary;
            for (const auto& [e, n] : count)
                if (n == 1) boundary.push_back(e);
            const EdgeKey& e = boundary[rng() % boundary.size()];
            Vertex w = t.fresh();
            t.faces.push_back(curvata::make_simplex({e.first, e.second, w}));
        }
    }
    return t.faces;
}

inline std::vector<Simplex> random_sphere(std::mt19937& rng, int steps) {
    Triangulation t;
    Vertex a = t.fresh(), b = t.fresh(), c = t.fresh(), d = t.fresh();
    t.faces = {curvata::make_simplex({a, b, c}), curvata::make_simplex({a, b, d}),
               curvata::make_simplex({a, c, d}), curvata::make_simplex({b, c, d})};
    for (int i = 0; i < steps; ++i) {
        std::size_t fi = rng() % t.faces.size();
        Simplex f = t.faces[fi];
        t.faces.erase(t.faces.begin() + fi);
        Vertex w = t.fresh();
        t.faces.push_back(curvata::make_simplex({f[0], f[1], w}));
        t.faces.push_back(curvata::make_simplex({f[0], f[2], w}));
        t.faces.push_back(curvata::make_simplex({f[1], f[2], w}));
    }
    return t.faces;
}

// Random lengths from {1/6, 1/4, 1/3, 1/2}, locally repaired until every
// triangle satisfies the sum and triangle-inequality conditions.
inline std::map<EdgeKey, Rational> random_valid_lengths(const SimplicialComplex& cx,
                                                        std::mt19937& rng) {
    const Rational pool[4] = {{1, 6}, {1, 4}, {1, 3}, {1, 2}};
    std::map<EdgeKey, Rational> ls;
    for (const auto& e : cx.edges()) ls.emplace(e, pool[rng() % 4]);
    auto faces = cx.faces_of_dim(2);
    for (int round = 0; round < 10000; ++round) {
        bool bad = false;
        for (const auto& f : faces) {
            EdgeKey es[3] = {curvata::make_edge(f[0], f[1]), curvata::make_edge(f[0], f[2]),
                             curvata::make_edge(f[1], f[2])};
            Rational a = ls.at(es[0]), b = ls.at(es[1]), c = ls.at(es[2]);
            if (a + b + c > Rational(1) || a > b + c || b > a + c || c > a + b) {
                ls[es[rng() % 3]] = pool[rng() % 2]; // shrink toward 1/6 or 1/4
                bad = true;
            }
        }
        if (!bad) return ls;
    }
    for (auto& [e, l] : ls) l = Rational(1, 3); // always valid fallback
    return ls;
}

// ---------------------------------------------------------------------------
// Random triangulation of a convex polygon (recursive random diagonal).
// These complexes are flag with no full cycles at all, so they are large
// under any valid length function.
inline void triangulate_polygon(const std::vector<int>& idx, std::mt19937& rng,
                                std::vector<std::vector<int>>& out) {
    if (idx.size() < 3) return;
    if (idx.size() == 3) {
        out.push_back(idx);
        return;
    }
    std::size_t n = idx.size();
    // pick a random ear apex: split at (0, k) with 2 <= k <= n-2... choose a
    // random diagonal from vertex 0
    std::size_t k = 2 + rng() % (n - 3);
    std::vector<int> left(idx.begin(), idx.begin() + k + 1);
    std::vector<int> right{idx[0]};
    right.insert(right.end(), idx.begin() + k, idx.end());
    triangulate_polygon(left, rng, out);
    triangulate_polygon(right, rng, out);
}

inline std::vector<Simplex> random_polygon_triangulation(int n, std::mt19937& rng) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::vector<int>> tris;
    // rotate the index cycle randomly so the split point varies
    std::rotate(idx.begin(), idx.begin() + rng() % n, idx.end());
    triangulate_polygon(idx, rng, tris);
    std::vector<Simplex> out;
    for (const auto& t : tris)
        out.push_back(curvata::make_simplex({"g" + std::to_string(t[0]),
                                             "g" + std::to_string(t[1]),
                                             "g" + std::to_string(t[2])}));
    return out;
}

inline std::vector<Vertex> polygon_boundary(int n) {
    std::vector<Vertex> out;
    for (int i = 0; i < n; ++i) out.push_back("g" + std::to_string(i));
    return out;
}

// ---------------------------------------------------------------------------
// Triangular-lattice disks: all lattice points within hex distance r of the
// segment (0,0)..(k,0), triangulated by the unit up/down triangles. Interior
// vertices have degree 6, so with constant length 1/3 these disks are
// locally large, and their boundaries are convex (no chords).
struct LatticeDisk {
    std::vector<Simplex> faces;
    std::map<Vertex, std::pair<int, int>> coords;
};

inline int hex_dist(int x, int y) {
    int z = -x - y;
    return (std::abs(x) + std::abs(y) + std::abs(z)) / 2;
}

inline LatticeDisk lattice_ball_disk(int r, int k) {
    auto inside = [&](int x, int y) {
        for (int c = 0; c <= k; ++c)
            if (hex_dist(x - c, y) <= r) return true;
        return false;
    };
    auto name = [](int x, int y) {
        return "L" + std::to_string(x) + "_" + std::to_string(y);
    };
    LatticeDisk d;
    for (int x = -r - 2; x <= k + r + 2; ++x)
        for (int y = -r - 2; y <= r + 2; ++y) {
            if (inside(x, y)) d.coords[name(x, y)] = {x, y};
            if (inside(x, y) && inside(x + 1, y) && inside(x, y + 1))
                d.faces.push_back(
                    curvata::make_simplex({name(x, y), name(x + 1, y), name(x, y + 1)}));
            if (inside(x + 1, y) && inside(x, y + 1) && inside(x + 1, y + 1))
                d.faces.push_back(curvata::make_simplex(
                    {name(x + 1, y), name(x, y + 1), name(x + 1, y + 1)}));
        }
    return d;
}

// ---------------------------------------------------------------------------
// Random (2,2)-free two-dimensional defining graphs.
inline DefiningGraph random_defining_graph(std::mt19937& rng, int nverts) {
    while (true) {
        DefiningGraph g;
        std::vector<Vertex> vs;
        for (int i = 0; i < nverts; ++i) {
            vs.push_back("x" + std::to_string(i));
            g.add_vertex(vs.back());
        }
        for (int i = 0; i < nverts; ++i)
            for (int j = i + 1; j < nverts; ++j) {
                int roll = static_cast<int>(rng() % 100);
                if (roll < 45) continue; // label infinity
                int label;
                if (roll < 55)
                    label = 2;
                else
                    label = 3 + static_cast<int>(rng() % 10); // 3..12
                g.add_edge(vs[i], vs[j], label);
            }
        if (is_two_dimensional(g).two_dimensional && is_22_free(g).free) return g;
    }
}

// Brute-force enumeration of odd-labeled simple paths; returns the set of
// unordered vertex pairs joined by at least one such path.
inline std::set<std::pair<Vertex, Vertex>> odd_path_pairs(const DefiningGraph& g) {
    std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
    std::set<std::pair<Vertex, Vertex>> out;
    std::vector<Vertex> path;
    std::function<void()> extend = [&]() {
        const Vertex last = path.back(); // copy: path may reallocate below
        for (const auto& w : vs) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            auto lab = g.label(last, w);
            if (!lab || *lab % 2 == 0) continue;
            path.push_back(w);
            auto pr = std::minmax(path.front(), path.back());
            out.insert({pr.first, pr.second});
            extend();
            path.pop_back();
        }
    };
    for (const auto& v : vs) {
        path = {v};
        extend();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rewriting-closure oracle for the dihedral Artin monoid: all positive words
// reachable from w by swapping alternating length-m subwords.
inline std::set<std::string> rewriting_closure(const std::string& w, int m) {
    auto alternating = [&](const std::string& u, std::size_t from) {
        for (int i = 0; i < m - 1; ++i)
            if (u[from + i] == u[from + i + 1]) return false;
        return true;
    };
    std::set<std::string> seen{w};
    std::vector<std::string> stack{w};
    while (!stack.empty()) {
        std::string u = stack.back();
        stack.pop_back();
        if (u.size() < static_cast<std::size_t>(m)) continue;
        for (std::size_t i = 0; i + m <= u.size(); ++i) {
            if (!alternating(u, i)) continue;
            std::string v = u;
            for (int j = 0; j < m; ++j)
                v[i + j] = u[i + j] == 's' ? 't' : 's';
            if (seen.insert(v).second) stack.push_back(v);
        }
    }
    return seen;
}

} // namespace testutil
