#pragma once
// Census machinery: isomorph-free enumeration of the proper odd-column
// rank-k colourings of a polytope (optionally restricted to rational
// homology spheres) and the orbit-propagation construction that imposes a
// prescribed symmetry from the start.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhs/admissible.hpp"
#include "qhs/colouring.hpp"
#include "qhs/gf2.hpp"
#include "qhs/polytope.hpp"
#include "qhs/symmetry.hpp"

namespace qhs {

// Census parameters.  Facets are coloured in breadth-first order from the
// base vertex under the span rule: a facet may take any odd colour in the
// span of the basis vectors introduced so far, or introduce the next basis
// vector.  Since the base facets are pairwise adjacent this forces e1, e2,
// e3 on the base triple, and every equivalence class contains such a
// normalized colouring, so nothing is missed; the residual overcounting is
// removed by full canonicalization at the leaves.
struct EnumerationTask {
    const Polytope* polytope = nullptr;
    int k = 0;
    bool qhs = false;         // keep rational homology spheres only
    bool qhs_pruning = true;  // with qhs: drop branches whose partial
                              // two-colour graphs already closed a cycle
    std::array<int, 3> base = {-1, -1, -1};  // base vertex facets; all -1
                                             // picks the smallest vertex
    int threads = 1;
};

// One equivalence class under Sym(P) x GL_k^or.
struct ClassEntry {
    Colouring rep;    // canonical representative
    std::string key;  // its defining-matrix text, the sort key
    SymGroupReport sym;
    std::array<int, 4> betti;
};

using ClassList = std::vector<ClassEntry>;

// Exactly one entry per equivalence class of proper (optionally QHS)
// odd-column rank-k colourings, sorted by key.  Work is split across
// threads by search-tree prefix; the merged result is schedule independent.
ClassList enumerate_colourings(const EnumerationTask& task);

// Histogram of identified group names over the classes.
std::map<std::string, int> classify_by_symmetry(const ClassList& classes);

// Colourings admitting phi by construction.  For every orientation
// preserving A with A^(order of phi) = id consistent with the seed, colours
// propagate along phi-orbits as lambda(phi^i F) = A^i lambda(F).  Matrices
// conjugate under an orientation preserving map fixing all seed colours
// build equivalent families, so only one per conjugation orbit runs.  An
// orbit without a seeded facet ranges over the odd colours that survive its
// own closure and adjacency constraints; raw_candidates counts the (A, free
// orbit colours) combinations before the cross-orbit properness and QHS
// filters run.  phi is admissible in every returned class.
struct ConstructReport {
    long long raw_candidates = 0;
    ClassList classes;
};

ConstructReport construct_with_symmetry(const Polytope& p, const FacetMap& phi, int k,
                                        const std::vector<std::pair<int, gf2::BitVec>>& seed,
                                        bool qhs);

}  // namespace qhs
