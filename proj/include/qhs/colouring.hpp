#pragma once
// Facet colourings by Z_2^k: properness, orientability, induced subcomplexes
// of the dual sphere, rank k+1 extensions, and canonical forms under the
// action of Sym(P) x GL_k(Z_2).

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qhs/gf2.hpp"
#include "qhs/polytope.hpp"
#include "qhs/symmetry.hpp"

namespace qhs {

// An assignment of a colour in Z_2^k to every facet.  The colours must span
// Z_2^k (the defining matrix has rank k); non-surjective assignments are
// rejected at construction.
struct Colouring {
    int k = 0;
    std::vector<gf2::BitVec> colours;  // colours[f], each of length k

    Colouring(int rank, std::vector<gf2::BitVec> assignment);

    int facet_count() const { return static_cast<int>(colours.size()); }
    gf2::BitVec colour(int f) const { return colours[f]; }
    // Defining matrix: k rows of length m, column f = colour of facet f.
    gf2::BitMatrix matrix() const;

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

// Reads the k x m defining matrix back into a colouring.
Colouring colouring_from_matrix(const gf2::BitMatrix& rows);

// Proper: the colours on every simplex of the dual complex are linearly
// independent.  When every colour has odd weight this reduces to adjacent
// facets having distinct colours, which is the fast path taken here.
bool is_proper(const Polytope& p, const Colouring& c);
// Always runs the full rank check on every vertex, edge and triangle.
bool is_proper_independence(const Polytope& p, const Colouring& c);

// The vector (1,...,1) indexed by facets lies in the row space of the
// defining matrix.
bool is_orientable(const Polytope& p, const Colouring& c);

// Full subcomplex of the dual sphere induced by the facets in the support of
// omega, with vertices relabelled 0..|support|-1.
struct Subcomplex {
    gf2::BitVec omega;
    std::vector<int> facets;  // support of omega, ascending; facets[i] is
                              // the original id of relabelled vertex i
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> triangles;

    int vertex_count() const { return static_cast<int>(facets.size()); }
};

Subcomplex subcomplex(const Polytope& p, gf2::BitVec omega);

// All colourings with one extra coordinate projecting back onto c: one per
// vector b outside the row space of the defining matrix (b becomes row k+1),
// 2^m - 2^k in total.  Guarded to m <= 16 since the list is exponential in m.
std::vector<Colouring> extensions(const Polytope& p, const Colouring& c);

enum class GlMode { full_gl, gl_or };

// Precomputed data for canonical forms on one polytope: the automorphism
// group as facet image tables.  Build once, then call form() freely (also
// from several threads).
class CanonicalContext {
  public:
    CanonicalContext(const Polytope& p, int k, GlMode mode);

    // Lexicographically minimal defining-matrix text over all
    // (s, M) in Sym(P) x GL: column j of the candidate is M * colour(s(j)),
    // compared as the row-major '0'/'1' byte string.  The minimum over M is
    // not enumerated: the rows of M * Lambda range exactly over the ordered
    // bases of the row space of Lambda (for GL^or, those summing to the sum
    // of all rows), so each row is chosen greedily smallest subject to a
    // completability test.
    std::string form(const Colouring& c) const;

    int rank() const { return k_; }

  private:
    int k_ = 0;
    int m_ = 0;
    GlMode mode_ = GlMode::full_gl;
    std::vector<std::vector<int>> sym_;  // facet images per symmetry
};

std::string canonical_form(const Polytope& p, const Colouring& c, GlMode mode);
bool equivalent(const Polytope& p, const Colouring& a, const Colouring& b,
                GlMode mode = GlMode::full_gl);

}  // namespace qhs
