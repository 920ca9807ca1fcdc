#pragma once
// Combinatorial symmetries of simple 3-polytopes: automorphisms of the
// boundary complex as facet permutations, their orientation character, and
// their geometric classification (every automorphism of the 2-sphere complex
// is conjugate to an isometry, so rotation / reflection language applies).

#include <string>
#include <vector>

#include "qhs/polytope.hpp"

namespace qhs {

// Facet permutation induced by an isomorphism of boundary complexes,
// 0-based.  For maps between two polytopes image[f] lives in the target.
struct FacetMap {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int f) const { return image[f]; }

    friend bool operator==(const FacetMap&, const FacetMap&) = default;
    friend bool operator<(const FacetMap& a, const FacetMap& b) { return a.image < b.image; }
};

FacetMap identity_map(int m);
FacetMap compose(const FacetMap& a, const FacetMap& b);  // (a*b)(f) = a(b(f))
FacetMap inverse_map(const FacetMap& a);
int map_order(const FacetMap& a);
// 1-based cycle notation, fixed points omitted, "()" for the identity.
std::string cycle_notation(const FacetMap& a);

// All isomorphisms p -> q sending vertices to vertices, found by propagating
// a seed flag (image of facet 0, position in its boundary cycle, global
// orientation sign) across the facet adjacency graph.  Sorted by image
// vector; empty when the polytopes are not isomorphic.
std::vector<FacetMap> isomorphisms(const Polytope& p, const Polytope& q);
// The automorphism group of p; the identity sorts first.
std::vector<FacetMap> automorphisms(const Polytope& p);

// +1 if a maps boundary cycles forward, -1 if backward.  a must be an
// automorphism of p.
int orientation_character(const Polytope& p, const FacetMap& a);

// Cells (as indices into facets / edges() / vertices()) that a maps to
// themselves setwise.
struct InvariantCells {
    std::vector<int> facets;
    std::vector<int> edges;
    std::vector<int> vertices;

    size_t total() const { return facets.size() + edges.size() + vertices.size(); }
};

InvariantCells invariant_cells(const Polytope& p, const FacetMap& a);

// Conjugacy type of an automorphism, named after the isometry realizing it.
// Rotations are split by what the two poles of the axis sit in; a
// rotoreflection is classified by the poles of its square.
enum class SymmetryKind {
    identity,
    face_rotation,
    edge_rotation,
    vertex_rotation,
    face_edge_rotation,
    face_vertex_rotation,
    reflection,
    antipodal,
    edge_rotoreflection,
    vertex_rotoreflection,
    face_rotoreflection,
};

std::string kind_name(SymmetryKind k);

struct SymmetryClass {
    SymmetryKind kind = SymmetryKind::identity;
    int order = 1;
    int epsilon = 1;
};

// Throws std::invalid_argument if the invariant cell pattern matches no
// isometry type (cannot happen for a genuine automorphism).
SymmetryClass classify(const Polytope& p, const FacetMap& a);

// Facets meeting some invariant cell: the facets a rotation or reflection
// pins down.  Empty exactly for antipodal maps and rotoreflections.
std::vector<int> fix_facets(const Polytope& p, const FacetMap& a);

}  // namespace qhs
