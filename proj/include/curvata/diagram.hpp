#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "curvata/complex.hpp"

namespace curvata {

// Simplicial map from a triangulated disk into a length complex.
struct DiskDiagram {
    SimplicialComplex disk;
    LengthComplex target;
    std::map<Vertex, Vertex> vertex_map;
};

struct DiskShape {
    bool valid = false;
    std::vector<std::string> defects;
    CycleRef boundary; // set when valid
};

// Checks that `disk` is a triangulated 2-disk (connected 2-manifold with a
// single boundary cycle) and extracts its boundary.
DiskShape analyze_disk(const SimplicialComplex& disk);

// Pullback of the target lengths along the vertex map. Throws on a
// degenerate edge (no pullback length exists there).
LengthComplex pullback(const DiskDiagram& d);

// Validity of d as a nondegenerate filling diagram for sigma; defects are
// data, not errors.
std::vector<std::string> check_filling_diagram(const DiskDiagram& d, const CycleRef& sigma);

// The inductive diagonal-splitting construction: a filling diagram with no
// interior vertices and |sigma| - 2 triangles, over a large target.
DiskDiagram fill_no_interior(const LengthComplex& x, const CycleRef& sigma);

// Degenerate-edge excision plus star replacement at interior vertices whose
// pullback link is shorter than 2, until the pullback is locally large.
// Strictly decreases the triangle count at every step.
DiskDiagram reduce_to_locally_large(const DiskDiagram& d);

// Annular boundary complex of a disk: the boundary-layer triangles, glued
// only along vertices and edges incident to the boundary. Interior vertices
// of the first layer may be duplicated; with exactly two interior vertices a
// doubled edge appears and the structure is a multigraph cell complex.
struct BoundaryAnnulus {
    std::vector<std::string> vertex_names; // index = vertex class id

    struct AEdge {
        int a, b;          // vertex class ids
        Rational len;
        EdgeKey disk_edge; // edge of D this class came from
    };
    std::vector<AEdge> edges;

    struct AFace {
        std::array<int, 3> verts;
        std::array<int, 3> edge_ids;
        Simplex disk_face;
    };
    std::vector<AFace> faces;

    std::vector<int> outer_vertices, outer_edges; // cyclic, isomorphic to dD
    std::vector<int> inner_vertices, inner_edges; // cyclic
    bool doubled_edge = false;

    Rational outer_length() const;
    Rational inner_length() const;
};

BoundaryAnnulus boundary_annulus(const DiskDiagram& d);

// Exact Gauss-Bonnet total over the annulus cell structure; zero on every
// valid instance (the annulus has Euler characteristic 0).
Rational annulus_curvature_total(const BoundaryAnnulus& a);

struct AnnulusInequality {
    Rational outer, inner;
    bool holds; // outer >= inner + 2
};

AnnulusInequality annulus_inequality_check(const DiskDiagram& d);

// Shortest path between two disk vertices under the pullback lengths.
Geodesic shortcut_search(const DiskDiagram& d, const Vertex& u, const Vertex& v);

} // namespace curvata
