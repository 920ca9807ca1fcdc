#pragma once
// Shared helpers for the test suite.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "qhs/colouring.hpp"
#include "qhs/gf2.hpp"
#include "qhs/polytope.hpp"
#include "qhs/symmetry.hpp"

namespace fixtures {

// n-gonal prism: facet 1 top, facet 2 bottom, facets 3..n+2 the side ring in
// cyclic order.  Simple but not right-angled; handy for symmetry cases the
// right-angled generators do not exhibit.
inline qhs::Polytope build_prism(int n)
{
    qhs::PolytopeData d;
    d.name = "prism:" + std::to_string(n);
    d.m = n + 2;
    for (int i = 0; i < n; ++i) {
        int s = 3 + i;
        int t = 3 + (i + 1) % n;
        d.vertices.push_back({1, s, t});
        d.vertices.push_back({2, s, t});
    }
    return qhs::Polytope::build(std::move(d));
}

// Periodic small-cover colouring of the Loebell polytope R(n): top coloured
// 1, bottom 2, upper ring 2,3,4 repeating, lower ring 4,1,3 repeating, with
// palette 1..4 -> e1, e2, e3, e1+e2+e3.  Proper iff n is not 1 mod 3; for
// n = 5 this is the Garrison-Scott dodecahedron colouring.
inline qhs::Colouring lobell_pattern(int n)
{
    using qhs::gf2::parse_bits;
    const qhs::gf2::BitVec pal[5] = {parse_bits("000"), parse_bits("100"), parse_bits("010"),
                                     parse_bits("001"), parse_bits("111")};
    static const int ucol[3] = {2, 3, 4};
    static const int lcol[3] = {4, 1, 3};
    std::vector<qhs::gf2::BitVec> cols(2 * n + 2, pal[0]);
    cols[0] = pal[1];
    cols[2 * n + 1] = pal[2];
    for (int i = 0; i < n; ++i) {
        cols[1 + i] = pal[ucol[i % 3]];
        cols[n + 1 + i] = pal[lcol[i % 3]];
    }
    return qhs::Colouring(3, std::move(cols));
}

// The rank 4 colouring of R(7) carried by the heptagon rotation, with
// admissible group Z_7.
inline qhs::Colouring z7_colouring()
{
    qhs::gf2::BitMatrix m = qhs::gf2::parse_matrix(
        "1000101110110001\n"
        "0100111011101000\n"
        "0010011101110100\n"
        "0001110111010010\n");
    return qhs::colouring_from_matrix(m);
}

// Shift of both pentagon rings of R(7) by one step, fixing the heptagons.
inline qhs::FacetMap lobell7_rotation()
{
    return qhs::FacetMap{{0, 2, 3, 4, 5, 6, 7, 1, 9, 10, 11, 12, 13, 14, 8, 15}};
}

// Uniform odd colours, rejection-sampled until they span Z_2^k.
inline qhs::Colouring random_odd_colouring(std::mt19937& rng, const qhs::Polytope& p, int k)
{
    auto odd = qhs::gf2::orientable_vectors(k);
    for (;;) {
        std::vector<qhs::gf2::BitVec> cols;
        qhs::gf2::SpanBasis span;
        for (int f = 0; f < p.facet_count(); ++f) {
            cols.push_back(odd[rng() % odd.size()]);
            span.insert(cols.back().bits);
        }
        if (span.dim() == k) return qhs::Colouring(k, std::move(cols));
    }
}

// Random proper odd colouring via backtracking with shuffled palettes (plain
// rejection is hopeless: the dodecahedron admits only 240 proper rank 3
// assignments among 4^12 odd ones).  Odd colours make properness the same as
// adjacent facets receiving distinct colours.
inline qhs::Colouring random_proper_odd_colouring(std::mt19937& rng, const qhs::Polytope& p,
                                                  int k)
{
    auto odd = qhs::gf2::orientable_vectors(k);
    int m = p.facet_count();
    for (;;) {
        std::vector<qhs::gf2::BitVec> cols(m, qhs::gf2::BitVec(0, k));
        auto go = [&](auto&& self, int f) -> bool {
            if (f == m) return true;
            auto order = odd;
            std::shuffle(order.begin(), order.end(), rng);
            for (auto v : order) {
                bool clash = false;
                for (int g : p.neighbours(f)) {
                    if (g < f && cols[g] == v) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    cols[f] = v;
                    if (self(self, f + 1)) return true;
                }
            }
            return false;
        };
        if (!go(go, 0)) continue;
        qhs::gf2::SpanBasis span;
        for (auto v : cols) span.insert(v.bits);
        if (span.dim() == k) return qhs::Colouring(k, std::move(cols));
    }
}

// Uniform nonzero colours (even ones allowed), spanning Z_2^k.
inline qhs::Colouring random_colouring(std::mt19937& rng, const qhs::Polytope& p, int k)
{
    for (;;) {
        std::vector<qhs::gf2::BitVec> cols;
        qhs::gf2::SpanBasis span;
        for (int f = 0; f < p.facet_count(); ++f) {
            cols.push_back({1u + static_cast<uint32_t>(rng() % ((1u << k) - 1u)), k});
            span.insert(cols.back().bits);
        }
        if (span.dim() == k) return qhs::Colouring(k, std::move(cols));
    }
}

}  // namespace fixtures
