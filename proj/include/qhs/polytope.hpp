#pragma once
// Combinatorics of simple 3-polytopes.
//
// A polytope is stored by its facet count m and its vertices, each vertex
// being the triple of facets meeting there (simple: exactly three per
// vertex).  Facet ids are 1-based in files and printed output, 0-based
// everywhere inside the library.  Everything else (edges, facet adjacency,
// boundary cycles, the dual triangulation of S^2) is derived and validated at
// construction: a facet pair is an edge iff it occurs in exactly two vertex
// triples, V - E + m must equal 2, every facet boundary must close into a
// single cycle, and the facet adjacency graph must be connected.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhs {

// Raw input, 1-based facet ids as they appear in files.
struct PolytopeData {
    std::string name;
    int m = 0;
    std::vector<std::array<int, 3>> vertices;

    friend bool operator==(const PolytopeData&, const PolytopeData&) = default;
};

// Names of violated invariants, empty when the data describes a simple
// 3-polytope.  Possible entries: vertex_format, facet_count_limit,
// facet_degree, simplicity, euler, facet_cycle, connectivity.
std::vector<std::string> validate(const PolytopeData& data);

class Polytope {
  public:
    // Validates and derives; throws std::invalid_argument listing the
    // violations on bad data.
    static Polytope build(PolytopeData data);

    const std::string& name() const { return name_; }
    int facet_count() const { return m_; }
    // Sorted triples of 0-based facet ids, lexicographically ordered.
    const std::vector<std::array<int, 3>>& vertices() const { return vertices_; }
    // Sorted pairs of 0-based facet ids.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int f) const { return adj_[f]; }
    bool adjacent(int f, int g) const;
    // Boundary cycle of facet f as its neighbours in rotation order; the
    // cycles are oriented consistently across the whole sphere (each edge is
    // traversed once in each direction).
    const std::vector<int>& rotation(int f) const { return rotation_[f]; }

    int vertex_index(std::array<int, 3> triple) const;  // -1 if absent
    int edge_index(int f, int g) const;                 // -1 if absent

    PolytopeData data() const;  // back to 1-based form

  private:
    std::string name_;
    int m_ = 0;
    std::vector<std::array<int, 3>> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> rotation_;
};

// The dual simplicial complex K on the facet set: one triangle per polytope
// vertex, one edge per polytope edge.  It triangulates S^2.
struct DualComplex {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> triangles;

    int euler_characteristic() const
    {
        return vertex_count - static_cast<int>(edges.size()) +
               static_cast<int>(triangles.size());
    }
};

DualComplex dual_complex(const Polytope& p);

// Generators.  The cube labels opposite facet pairs {1,2}, {3,4}, {5,6}.
Polytope build_cube();
Polytope build_simplex3();
Polytope build_dodecahedron();

// Loebell polytope R(N), N >= 5: two N-gons (facets 1 and 2N+2) separated by
// two rings of N pentagons.  Facets 2..N+1 form the upper ring in cyclic
// order with facets 2 and 3 sharing a vertex with facet 1; facets N+2..2N+1
// form the lower ring with facet N+2 adjacent to facet 2.  R(5) is the
// dodecahedron.
Polytope build_lobell(int n);

}  // namespace qhs
