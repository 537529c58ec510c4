#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "curvata/rational.hpp"

namespace curvata {

using Vertex = std::string;
using Simplex = std::vector<Vertex>; // sorted, no repeats
using EdgeKey = std::pair<Vertex, Vertex>; // first < second

// Library-wide error with a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

Simplex make_simplex(std::vector<Vertex> verts);
EdgeKey make_edge(const Vertex& u, const Vertex& v);

// Finite abstract simplicial complex, stored as the full downward-closed
// family of nonempty simplices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

    void insert_closed(const Simplex& s);

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool has_vertex(const Vertex& v) const { return contains({v}); }
    bool has_edge(const Vertex& u, const Vertex& v) const;

    const std::set<Simplex>& simplices() const { return simplices_; }
    std::vector<Vertex> vertices() const;
    std::vector<EdgeKey> edges() const;
    std::vector<Simplex> faces_of_dim(int d) const;
    int dimension() const;

    // Sorted adjacency lists of the 1-skeleton.
    std::map<Vertex, std::vector<Vertex>> adjacency() const;

    SimplicialComplex link(const Simplex& s) const;
    long long euler_characteristic() const;

    struct FlagResult {
        bool flag = true;
        Simplex witness; // minimal non-spanning clique when flag is false
    };
    FlagResult is_flag() const;

    bool operator==(const SimplicialComplex& o) const {
        return simplices_ == o.simplices_;
    }

private:
    std::set<Simplex> simplices_;
};

struct CycleRef {
    std::vector<Vertex> vertices; // cyclic order, all distinct, >= 3
};

struct PathRef {
    std::vector<Vertex> vertices; // open, all distinct
};

// Rotation/reflection-minimal representative, for deduplication.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cyc);

// Simplicial complex plus an exact rational length per edge.
class LengthComplex {
public:
    LengthComplex() = default;
    LengthComplex(SimplicialComplex complex, std::map<EdgeKey, Rational> lengths);

    const SimplicialComplex& complex() const { return complex_; }
    const std::map<EdgeKey, Rational>& lengths() const { return lengths_; }

    const Rational& length(const Vertex& u, const Vertex& v) const;
    Rational cycle_length(const CycleRef& c) const;
    Rational path_length(const PathRef& p) const;

    std::optional<Rational> min_edge_length() const;

    // Link of a vertex with the inherited edge lengths.
    LengthComplex vertex_link(const Vertex& v) const;

private:
    SimplicialComplex complex_;
    std::map<EdgeKey, Rational> lengths_;
};

// All full cycles with at most max_edges edges, one per rotation/reflection
// class, in canonical order. A cycle is full iff it is chordless and does not
// bound a 2-simplex (only possible for 3-cycles).
std::vector<CycleRef> enumerate_full_cycles(const SimplicialComplex& x, int max_edges);

struct LargeResult {
    bool large = true;
    enum class Witness { None, NonFlagClique, ShortFullCycle } kind = Witness::None;
    Simplex clique;   // set when kind == NonFlagClique
    CycleRef cycle;   // set when kind == ShortFullCycle
};

// Flagness plus the bounded full-cycle check. With a zero-length edge present
// the enumeration bound is unavailable; callers must then supply max_edges.
LargeResult is_large(const LengthComplex& x,
                     std::optional<int> max_edges = std::nullopt);

struct LocallyLargeResult {
    bool locally_large = true;
    Vertex witness;      // vertex whose link fails, when not locally large
    LargeResult detail;  // failure detail for that link
};

LocallyLargeResult is_locally_large(const LengthComplex& x,
                                    std::optional<int> max_edges = std::nullopt);

struct Geodesic {
    Rational distance;
    PathRef path;
};

// Exact Dijkstra over the 1-skeleton; ties broken toward the
// lexicographically least path.
Geodesic geodesic_distance(const LengthComplex& x, const Vertex& u, const Vertex& v);

} // namespace curvata
