#pragma once
// Admissible symmetries of a coloured polytope: automorphisms whose action on
// colours extends to a linear map Psi(phi) of the colour space, the goodness
// test on fixed boundary cells, isomorphism-type naming for the small groups
// that arise, and an audit of the classification constraints on rational
// homology spheres.

#include <optional>
#include <string>
#include <vector>

#include "qhs/colouring.hpp"
#include "qhs/gf2.hpp"
#include "qhs/polytope.hpp"
#include "qhs/symmetry.hpp"

namespace qhs {

// The unique A in GL_k with A(lambda(F)) = lambda(phi(F)) for every facet F,
// when such a map exists.  A basis is picked greedily from the colour columns
// in facet order and the candidate is verified against every facet.
std::optional<gf2::SquareGF2> induced_linear_map(const Polytope& p, const Colouring& c,
                                                 const FacetMap& phi);

// Good: the colours of the facets meeting the fixed boundary cells of phi do
// not span the whole colour space.  Meaningful for admissible phi.
bool is_good(const Polytope& p, const Colouring& c, const FacetMap& phi);

struct SymElement {
    FacetMap phi;
    gf2::SquareGF2 psi;
    SymmetryClass cls;
    bool good = false;
};

// The coloured symmetry group Sym_lambda(P) with per-element data.  The
// coloured isometry group upstairs is the semidirect product with the deck
// group, of order |Sym_lambda(P)| * 2^k.
struct SymGroupReport {
    std::vector<SymElement> elements;  // identity first, then by facet image
    int group_order = 0;
    std::string identified_name;
    long long coloured_isometry_order = 0;

    const SymElement* find(const FacetMap& phi) const;
};

SymGroupReport admissible_group(const Polytope& p, const Colouring& c);

// Isomorphism type from (element order multiset, abelianness, group order).
// The triple separates every group of order at most 15 and the larger named
// candidates that can arise here; anything else comes back as
// "unrecognized(...)" carrying the raw invariants.
std::string identify_group(const std::vector<int>& orders, bool abelian, int group_order);

// Checks the admissible group of a proper orientable QHS colouring against
// the classification constraints (throws std::invalid_argument when the
// colouring is not one).  A violation means a bug in this library, not a
// mathematical discovery, and each entry names the offending element.
struct AuditReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

AuditReport obstruction_audit(const Polytope& p, const Colouring& c);

}  // namespace qhs
