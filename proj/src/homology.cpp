#include "qhs/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qhs {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Returns true when the merge joins two components.
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

using Wide = __int128;

Wide checked_mul(Wide a, Wide b)
{
    Wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::runtime_error("betti_complex: elimination overflow");
    return r;
}

Wide checked_sub(Wide a, Wide b)
{
    Wide r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::runtime_error("betti_complex: elimination overflow");
    return r;
}

// Fraction-free elimination; intermediate entries are exact minors of the
// input, so for boundary matrices of sphere subcomplexes (totally unimodular
// after coherent reorientation) they never leave {-1, 0, 1}.  The overflow
// checks only matter for the arbitrary complexes the tests feed in.
int bareiss_rank(std::vector<std::vector<Wide>> a)
{
    if (a.empty() || a[0].empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    Wide prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = checked_sub(checked_mul(a[i][j], a[rank][col]),
                                      checked_mul(a[i][col], a[rank][j])) /
                          prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

void check_facets(const Polytope& p, const Colouring& c)
{
    if (c.facet_count() != p.facet_count())
        throw std::invalid_argument("colouring does not match the polytope's facet count");
}

// Connected with a spanning-tree edge count; the building block of the
// small-cover criterion.
bool skeleton_is_tree(const Polytope& p, gf2::BitVec omega)
{
    if (omega.is_zero()) return false;
    UnionFind uf(p.facet_count());
    int verts = 0;
    int merges = 0;
    int edges = 0;
    for (int f = 0; f < p.facet_count(); ++f) verts += omega.get(f);
    for (auto [a, b] : p.edges()) {
        if (!omega.get(a) || !omega.get(b)) continue;
        ++edges;
        merges += uf.unite(a, b);
    }
    return merges == verts - 1 && edges == verts - 1;
}

bool skeleton_connected(const Polytope& p, gf2::BitVec omega)
{
    if (omega.is_zero()) return false;
    UnionFind uf(p.facet_count());
    int verts = 0;
    int merges = 0;
    for (int f = 0; f < p.facet_count(); ++f) verts += omega.get(f);
    for (auto [a, b] : p.edges()) {
        if (omega.get(a) && omega.get(b)) merges += uf.unite(a, b);
    }
    return merges == verts - 1;
}

// Number of opposite pairs, or a throw when the facets are not paired as
// {1,2}, {3,4}, ... with members of a pair the only non-adjacent facets.
int cube_pair_count(const Polytope& p)
{
    int m = p.facet_count();
    if (m % 2 != 0)
        throw std::invalid_argument("cube pairing: facet count must be even");
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            bool opposite = (a / 2 == b / 2);
            if (p.adjacent(a, b) == opposite)
                throw std::invalid_argument(
                    "cube pairing: facets must be non-adjacent exactly when paired");
        }
    }
    return m / 2;
}

}  // namespace

BettiTriple betti_complex(const Subcomplex& kw)
{
    int v = kw.vertex_count();
    if (v == 0) return {true, 0, 0, 0};

    UnionFind uf(v);
    int comps = v;
    for (auto [a, b] : kw.edges) comps -= uf.unite(a, b);

    int e = static_cast<int>(kw.edges.size());
    int t = static_cast<int>(kw.triangles.size());
    std::map<std::pair<int, int>, int> edge_row;
    for (int i = 0; i < e; ++i) edge_row.emplace(kw.edges[i], i);

    std::vector<std::vector<Wide>> d2(e, std::vector<Wide>(t, 0));
    for (int j = 0; j < t; ++j) {
        auto [a, b, c] = kw.triangles[j];
        auto row = [&](int x, int y) {
            auto it = edge_row.find({x, y});
            if (it == edge_row.end())
                throw std::invalid_argument("betti_complex: triangle with a missing edge");
            return it->second;
        };
        d2[row(a, b)][j] += 1;
        d2[row(b, c)][j] += 1;
        d2[row(a, c)][j] -= 1;
    }
    int r2 = t == 0 ? 0 : bareiss_rank(std::move(d2));

    BettiTriple out;
    out.b0 = comps - 1;
    out.b1 = e - (v - comps) - r2;
    out.b2 = t - r2;
    return out;
}

std::array<int, 4> betti_manifold(const Polytope& p, const Colouring& c)
{
    check_facets(p, c);
    std::array<int, 4> beta{0, 0, 0, 0};
    for (gf2::BitVec omega : gf2::row_space(c.matrix())) {
        BettiTriple bt = betti_complex(subcomplex(p, omega));
        if (bt.empty) beta[0] += 1;
        beta[1] += bt.b0;
        beta[2] += bt.b1;
        beta[3] += bt.b2;
    }
    return beta;
}

bool is_qhs(const Polytope& p, const Colouring& c)
{
    check_facets(p, c);
    if (!is_orientable(p, c)) return false;
    std::vector<gf2::BitVec> sweep = gf2::row_space(c.matrix());
    std::stable_sort(sweep.begin(), sweep.end(), [](gf2::BitVec a, gf2::BitVec b) {
        return a.weight() < b.weight();
    });
    int m = p.facet_count();
    for (gf2::BitVec omega : sweep) {
        if (omega.is_zero() || omega.weight() == m) continue;
        if (!skeleton_connected(p, omega)) return false;
    }
    return true;
}

bool is_qhs_small_cover(const Polytope& p, const Colouring& c)
{
    check_facets(p, c);
    if (c.k != 3)
        throw std::invalid_argument("small cover criterion needs a rank 3 colouring");
    for (gf2::BitVec v : c.colours) {
        if (!v.odd_weight())
            throw std::invalid_argument("small cover criterion needs odd colours");
    }
    gf2::BitMatrix rows = c.matrix();
    // Row i + row j supports exactly the facets coloured e_{i+1} or e_{j+1};
    // the fourth colour e1+e2+e3 drops out of every pair sum.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (!skeleton_is_tree(p, rows.rows[i] ^ rows.rows[j])) return false;
        }
    }
    return true;
}

std::vector<gf2::BitVec> cube_t_set(const Polytope& p, int j)
{
    int n = cube_pair_count(p);
    if (j < 0 || j > n) throw std::invalid_argument("cube_t_set: index out of range");
    std::vector<gf2::BitVec> out;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != j) continue;
        uint32_t bits = 0;
        for (int i = 0; i < n; ++i) {
            if ((s >> i) & 1u) bits |= 3u << (2 * i);
        }
        out.push_back({bits, p.facet_count()});
    }
    return out;
}

int betti_cube(const Polytope& p, const Colouring& c, int j)
{
    check_facets(p, c);
    gf2::BitMatrix rows = c.matrix();
    int hits = 0;
    for (gf2::BitVec t : cube_t_set(p, j)) hits += gf2::in_span(t, rows);
    return hits;
}

bool is_qhs_cube(const Polytope& p, const Colouring& c)
{
    check_facets(p, c);
    int n = cube_pair_count(p);
    if (!is_orientable(p, c)) return false;
    for (int j = 1; j < n; ++j) {
        if (betti_cube(p, c, j) != 0) return false;
    }
    return true;
}

}  // namespace qhs
