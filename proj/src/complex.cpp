#include "curvata/complex.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace curvata {

Simplex make_simplex(std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    auto dup = std::adjacent_find(verts.begin(), verts.end());
    if (dup != verts.end())
        throw Error("DuplicateVertexInSimplex", "repeated vertex '" + *dup + "'");
    return verts;
}

EdgeKey make_edge(const Vertex& u, const Vertex& v) {
    if (u == v) throw Error("LoopEdge", "edge endpoints coincide: '" + u + "'");
    return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
    if (maximal.empty())
        throw Error("EmptyInput", "no simplices given");
    SimplicialComplex x;
    for (const auto& s : maximal) {
        if (s.empty())
            throw Error("EmptyInput", "empty simplex");
        x.insert_closed(make_simplex(s));
    }
    return x;
}

void SimplicialComplex::insert_closed(const Simplex& s) {
    // Downward closure via subset enumeration; simplices are tiny.
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        simplices_.insert(std::move(face));
    }
}

bool SimplicialComplex::has_edge(const Vertex& u, const Vertex& v) const {
    if (u == v) return false;
    Simplex e{u, v};
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    return contains(e);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const auto& s : simplices_)
        if (s.size() == 1) out.push_back(s[0]);
    return out;
}

std::vector<EdgeKey> SimplicialComplex::edges() const {
    std::vector<EdgeKey> out;
    for (const auto& s : simplices_)
        if (s.size() == 2) out.emplace_back(s[0], s[1]);
    return out;
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int d) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices_)
        d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::map<Vertex, std::vector<Vertex>> SimplicialComplex::adjacency() const {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& v : vertices()) adj[v];
    for (const auto& [u, v] : edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    if (!contains(s))
        throw Error("SimplexNotFound", "link of a simplex not in the complex");
    SimplicialComplex lk;
    for (const auto& t : simplices_) {
        Simplex inter;
        std::set_intersection(t.begin(), t.end(), s.begin(), s.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) continue;
        Simplex join;
        std::set_union(t.begin(), t.end(), s.begin(), s.end(),
                       std::back_inserter(join));
        if (contains(join)) lk.simplices_.insert(t);
    }
    return lk;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (const auto& s : simplices_)
        chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

SimplicialComplex::FlagResult SimplicialComplex::is_flag() const {
    // Grow cliques level by level; the first non-spanning clique found this
    // way is of minimal size, and we pick the lexicographically least one.
    auto adj = adjacency();
    auto adjacent = [&](const Vertex& a, const Vertex& b) {
        const auto& na = adj.at(a);
        return std::binary_search(na.begin(), na.end(), b);
    };
    std::vector<Simplex> level;
    for (const auto& [u, v] : edges()) level.push_back({u, v});
    while (!level.empty()) {
        std::vector<Simplex> next;
        std::vector<Simplex> failures;
        for (const auto& c : level) {
            for (const auto& w : adj.at(c.back())) {
                if (w <= c.back()) continue;
                bool all = true;
                for (const auto& v : c)
                    if (!adjacent(v, w)) { all = false; break; }
                if (!all) continue;
                Simplex bigger = c;
                bigger.push_back(w);
                if (contains(bigger))
                    next.push_back(std::move(bigger));
                else
                    failures.push_back(std::move(bigger));
            }
        }
        if (!failures.empty()) {
            std::sort(failures.begin(), failures.end());
            return {false, failures.front()};
        }
        level = std::move(next);
    }
    return {true, {}};
}

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cyc) {
    const std::size_t n = cyc.size();
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<Vertex> seq = cyc;
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Vertex> rot(seq.begin() + r, seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + r);
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

LengthComplex::LengthComplex(SimplicialComplex complex,
                             std::map<EdgeKey, Rational> lengths)
    : complex_(std::move(complex)), lengths_(std::move(lengths)) {
    for (const auto& e : complex_.edges())
        if (!lengths_.count(e))
            throw Error("MissingLength",
                        "no length for edge " + e.first + "-" + e.second);
}

const Rational& LengthComplex::length(const Vertex& u, const Vertex& v) const {
    auto it = lengths_.find(make_edge(u, v));
    if (it == lengths_.end())
        throw Error("MissingLength", "no length for edge " + u + "-" + v);
    return it->second;
}

Rational LengthComplex::cycle_length(const CycleRef& c) const {
    Rational sum;
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        sum += length(vs[i], vs[(i + 1) % vs.size()]);
    return sum;
}

Rational LengthComplex::path_length(const PathRef& p) const {
    Rational sum;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        sum += length(p.vertices[i], p.vertices[i + 1]);
    return sum;
}

std::optional<Rational> LengthComplex::min_edge_length() const {
    std::optional<Rational> best;
    for (const auto& [e, l] : lengths_)
        if (!best || l < *best) best = l;
    return best;
}

LengthComplex LengthComplex::vertex_link(const Vertex& v) const {
    SimplicialComplex lk = complex_.link({v});
    std::map<EdgeKey, Rational> ls;
    for (const auto& e : lk.edges()) ls.emplace(e, length(e.first, e.second));
    return LengthComplex(std::move(lk), std::move(ls));
}

namespace {

// Chordless-cycle DFS: cycles are rooted at their least vertex, interior path
// vertices are all greater, and orientation is fixed by first < last.
void chordless_from(const SimplicialComplex& x,
                    const std::map<Vertex, std::vector<Vertex>>& adj,
                    const Vertex& root, std::vector<Vertex>& path,
                    int max_edges, std::vector<CycleRef>& out) {
    const Vertex& last = path.back();
    for (const auto& w : adj.at(last)) {
        if (w <= root) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        // w must see no path vertex other than the last (chords) ...
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (x.has_edge(path[i], w)) { chord = true; break; }
        if (chord) continue;
        // ... and if it sees the root the cycle must close here.
        if (x.has_edge(root, w)) {
            if (path.size() >= 2 && path[1] < w) {
                std::vector<Vertex> cyc = path;
                cyc.push_back(w);
                out.push_back({std::move(cyc)});
            }
            continue;
        }
        if (static_cast<int>(path.size()) + 2 > max_edges) continue;
        path.push_back(w);
        chordless_from(x, adj, root, path, max_edges, out);
        path.pop_back();
    }
}

} // namespace

std::vector<CycleRef> enumerate_full_cycles(const SimplicialComplex& x, int max_edges) {
    if (max_edges < 3)
        throw Error("BadBound", "max_edges must be at least 3");
    auto adj = x.adjacency();
    std::vector<CycleRef> found;
    for (const auto& [root, nbrs] : adj) {
        for (const auto& p1 : nbrs) {
            if (p1 <= root) continue;
            std::vector<Vertex> path{root, p1};
            chordless_from(x, adj, root, path, max_edges, found);
        }
    }
    std::vector<CycleRef> out;
    std::set<std::vector<Vertex>> seen;
    for (auto& c : found) {
        if (c.vertices.size() == 3) {
            Simplex tri = c.vertices;
            std::sort(tri.begin(), tri.end());
            if (x.contains(tri)) continue; // spans a 2-simplex, not full
        }
        auto canon = canonical_cycle(c.vertices);
        if (seen.insert(canon).second) out.push_back({std::move(canon)});
    }
    std::sort(out.begin(), out.end(), [](const CycleRef& a, const CycleRef& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

LargeResult is_large(const LengthComplex& x, std::optional<int> max_edges) {
    auto flag = x.complex().is_flag();
    if (!flag.flag) {
        LargeResult r;
        r.large = false;
        r.kind = LargeResult::Witness::NonFlagClique;
        r.clique = flag.witness;
        return r;
    }
    if (x.complex().edges().empty()) return {};
    int bound;
    auto lmin = x.min_edge_length();
    if (lmin && lmin->num() > 0) {
        // A full cycle with >= ceil(2/lmin) edges has length >= 2 for free.
        bound = static_cast<int>((Rational(2) / *lmin).ceil()) - 1;
        if (max_edges) bound = std::max(bound, *max_edges);
    } else if (max_edges) {
        bound = *max_edges;
    } else {
        throw Error("ZeroLengthEdge",
                    "zero-length edge present; supply max_edges to bound the search");
    }
    if (bound < 3) return {};
    int nverts = static_cast<int>(x.complex().vertices().size());
    bound = std::min(bound, nverts);
    if (bound < 3) return {};
    for (const auto& c : enumerate_full_cycles(x.complex(), bound)) {
        if (x.cycle_length(c) < Rational(2)) {
            LargeResult r;
            r.large = false;
            r.kind = LargeResult::Witness::ShortFullCycle;
            r.cycle = c;
            return r;
        }
    }
    return {};
}

LocallyLargeResult is_locally_large(const LengthComplex& x,
                                    std::optional<int> max_edges) {
    for (const auto& v : x.complex().vertices()) {
        auto r = is_large(x.vertex_link(v), max_edges);
        if (!r.large) return {false, v, r};
    }
    return {};
}

Geodesic geodesic_distance(const LengthComplex& x, const Vertex& u, const Vertex& v) {
    const auto& cx = x.complex();
    if (!cx.has_vertex(u)) throw Error("VertexNotFound", u);
    if (!cx.has_vertex(v)) throw Error("VertexNotFound", v);
    if (u == v) return {Rational(0), {}};

    auto adj = cx.adjacency();
    // Dijkstra from v so the walk below runs forward from u.
    std::map<Vertex, Rational> dist;
    using Item = std::pair<Rational, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[v] = Rational(0);
    pq.push({Rational(0), v});
    while (!pq.empty()) {
        auto [d, c] = pq.top();
        pq.pop();
        auto it = dist.find(c);
        if (it != dist.end() && d > it->second) continue;
        for (const auto& w : adj.at(c)) {
            Rational nd = d + x.length(c, w);
            auto jt = dist.find(w);
            if (jt == dist.end() || nd < jt->second) {
                dist[w] = nd;
                pq.push({nd, w});
            }
        }
    }
    if (!dist.count(u))
        throw Error("Disconnected", u + " and " + v + " are not connected");

    // Walk from u along distance-consistent edges, lex-least neighbor first.
    // The DFS guard handles zero-length edges, where greedy walks could loop.
    std::vector<Vertex> path{u};
    std::set<Vertex> used{u};
    std::function<bool()> walk = [&]() -> bool {
        const Vertex& c = path.back();
        if (c == v) return true;
        for (const auto& w : adj.at(c)) {
            if (used.count(w)) continue;
            if (dist.at(c) != dist.at(w) + x.length(c, w)) continue;
            path.push_back(w);
            used.insert(w);
            if (walk()) return true;
            used.erase(w);
            path.pop_back();
        }
        return false;
    };
    walk();
    return {dist.at(u), {path}};
}

} // namespace curvata
