#pragma once
// File formats and textual specs: polytope JSON files, colouring files (a
// polytope spec header plus matrix text), seed files, facet permutations in
// cycle notation, and named rotation axes.

#include <string>
#include <utility>
#include <vector>

#include "qhs/colouring.hpp"
#include "qhs/gf2.hpp"
#include "qhs/polytope.hpp"
#include "qhs/symmetry.hpp"

namespace qhs {

// {"name": <string>, "m": <int>, "vertices": [[i,j,k], ...]} with 1-based
// facet ids and no other keys.
PolytopeData parse_polytope_json(const std::string& text);
std::string polytope_json(const PolytopeData& data);

// cube | dodecahedron | simplex3 | lobell:<N> | file:<path>.  A relative
// path is resolved against base_dir when one is given.
Polytope resolve_polytope(const std::string& spec, const std::string& base_dir = "");

// First line: a polytope spec as above (file: paths relative to the
// colouring file's directory), then the defining matrix, one '0'/'1' row of
// length m per line.
struct ColouringFile {
    Polytope polytope;
    Colouring colouring;
};
ColouringFile read_colouring_file(const std::string& path);

// One "<facet> <colour bits>" pair per line, 1-based facet ids; blank lines
// and '#' comments are skipped.  Facets come back 0-based; every colour must
// have k bits.
std::vector<std::pair<int, gf2::BitVec>> parse_seed(const std::string& text, int k);
std::vector<std::pair<int, gf2::BitVec>> read_seed_file(const std::string& path, int k);

// Cycle notation with 1-based facet ids, e.g. "(1 2 3)(4 5)"; unmentioned
// facets stay fixed, "()" is the identity.  Inverse of cycle_notation.
FacetMap parse_cycles(const std::string& text, int m);

// A symmetry for the construct subcommand: either cycle notation or a named
// axis "face:<f>", "edge:<f,g>", "vertex:<f,g,h>" with 1-based ids.  A face
// axis picks the rotation about f with the lexicographically smallest image
// table among those of maximal order, an edge axis the half turn about that
// edge, a vertex axis the order 3 rotation sending f to g.
FacetMap parse_symmetry_spec(const Polytope& p, const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace qhs
