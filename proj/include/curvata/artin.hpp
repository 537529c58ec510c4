#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvata/complex.hpp"

namespace curvata {

// Labeled defining graph of an Artin group. A missing edge means label
// infinity.
class DefiningGraph {
public:
    DefiningGraph() = default;

    void add_vertex(const Vertex& v) { vertices_.insert(v); }
    void add_edge(const Vertex& s, const Vertex& t, int label);

    const std::set<Vertex>& vertices() const { return vertices_; }
    const std::map<EdgeKey, int>& edges() const { return edges_; }

    std::optional<int> label(const Vertex& s, const Vertex& t) const;
    bool has_edge(const Vertex& s, const Vertex& t) const;

    // Full subgraph spanned by a vertex subset.
    DefiningGraph induced(const std::set<Vertex>& subset) const;

    // All triangles {r,s,t} with all three edges present, sorted.
    std::vector<Simplex> triangles() const;

private:
    std::set<Vertex> vertices_;
    std::map<EdgeKey, int> edges_;
};

DefiningGraph parse_defining_graph(const std::string& text);

struct TwoDimResult {
    bool two_dimensional = true;
    Simplex witness; // violating triangle
};
TwoDimResult is_two_dimensional(const DefiningGraph& g);

struct TwoTwoFreeResult {
    bool free = true;
    Vertex witness; // vertex meeting two 2-labeled edges
};
TwoTwoFreeResult is_22_free(const DefiningGraph& g);

// m' relabeling: every edge gets a label in {2,3,4,6}, at most the original,
// such that triangle sums of reciprocals stay <= 1 and the reciprocal
// triangle inequality holds. Only defined for two-dimensional (2,2)-free
// graphs; the output is re-validated on every call.
using PrimeLabeling = std::map<EdgeKey, int>;
PrimeLabeling derive_prime_labels(const DefiningGraph& g);

// 1/m' for an existing edge; nullopt for a missing edge (the tree case,
// which carries no triangle constraint).
std::optional<Rational> edge_type_length(const PrimeLabeling& pl, const Vertex& s,
                                         const Vertex& t);

struct ConjugacyStability {
    bool stable = true;
    std::pair<Vertex, Vertex> witness; // lexicographically least unstable pair
};

// Odd-labeled-path criterion: A_{S'} is unstable iff some pair of S' is
// joined by an odd-labeled path in the full graph but not within the
// subgraph on S'.
ConjugacyStability conjugacy_stable(const DefiningGraph& g, const std::set<Vertex>& subset);

} // namespace curvata
