#pragma once
// Rational homology of the colour subcomplexes K_omega and of the associated
// manifold, plus the three quickest routes to the rational-homology-sphere
// verdict: the general subcomplex sweep, the small-cover tree criterion, and
// the cube T-set criterion.

#include <array>
#include <vector>

#include "qhs/colouring.hpp"
#include "qhs/gf2.hpp"
#include "qhs/polytope.hpp"

namespace qhs {

// Reduced rational Betti numbers of a complex of dimension <= 2.  The empty
// complex carries its nonzero homology in degree -1; it is reported with the
// flag set and all listed numbers zero.
struct BettiTriple {
    bool empty = false;
    int b0 = 0;
    int b1 = 0;
    int b2 = 0;

    bool is_point_like() const { return !empty && b0 == 0 && b1 == 0 && b2 == 0; }

    friend bool operator==(const BettiTriple&, const BettiTriple&) = default;
};

// Exact ranks: components by union-find, rank of the triangle boundary by
// fraction-free integer elimination in 128-bit arithmetic.
BettiTriple betti_complex(const Subcomplex& kw);

// Betti numbers of the manifold: beta_p = sum over omega in Row(Lambda) of
// the reduced (p-1)-th Betti number of K_omega, the omega = 0 term giving
// beta_0 and the omega = epsilon term (when present) giving beta_3.
// Expects a proper colouring.
std::array<int, 4> betti_manifold(const Polytope& p, const Colouring& c);

// True iff the colouring is orientable and every K_omega for omega in
// Row(Lambda) minus {0, epsilon} has a nonempty connected 1-skeleton.  The
// sweep visits omega by increasing weight so sparse failures surface first.
bool is_qhs(const Polytope& p, const Colouring& c);

// Small-cover shortcut, rank 3 with odd colours only (throws otherwise):
// the two-colour graphs G_{1,2}, G_{1,3}, G_{2,3} over the palette
// e1, e2, e3, e1+e2+e3 must all be trees.
bool is_qhs_small_cover(const Polytope& p, const Colouring& c);

// Cube route.  The polytope must pair opposite facets as {1,2}, {3,4}, ...:
// members of a pair non-adjacent, everything else adjacent (throws
// otherwise).  T_1 holds the pair indicator vectors; T_j their j-fold sums.
std::vector<gf2::BitVec> cube_t_set(const Polytope& p, int j);
// |Row(Lambda) intersected with T_j| = beta_j of the manifold.
int betti_cube(const Polytope& p, const Colouring& c, int j);
// Orientable and Row(Lambda) misses T_1, ..., T_{n-1}.
bool is_qhs_cube(const Polytope& p, const Colouring& c);

}  // namespace qhs
