#include "qhs/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qhs {

FacetMap identity_map(int m)
{
    FacetMap a;
    a.image.resize(m);
    for (int f = 0; f < m; ++f) a.image[f] = f;
    return a;
}

FacetMap compose(const FacetMap& a, const FacetMap& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    FacetMap c;
    c.image.resize(a.size());
    for (int f = 0; f < b.size(); ++f) c.image[f] = a.image[b.image[f]];
    return c;
}

FacetMap inverse_map(const FacetMap& a)
{
    FacetMap inv;
    inv.image.assign(a.size(), -1);
    for (int f = 0; f < a.size(); ++f) inv.image[a.image[f]] = f;
    for (int f = 0; f < a.size(); ++f)
        if (inv.image[f] < 0) throw std::invalid_argument("inverse_map: not a permutation");
    return inv;
}

int map_order(const FacetMap& a)
{
    FacetMap p = a;
    FacetMap id = identity_map(a.size());
    int order = 1;
    while (!(p == id)) {
        p = compose(a, p);
        ++order;
        if (order > 1 << 20) throw std::logic_error("map_order: runaway");
    }
    return order;
}

std::string cycle_notation(const FacetMap& a)
{
    std::string out;
    std::vector<bool> seen(a.size(), false);
    for (int f = 0; f < a.size(); ++f) {
        if (seen[f] || a.image[f] == f) continue;
        out.push_back('(');
        int g = f;
        bool first = true;
        while (!seen[g]) {
            seen[g] = true;
            if (!first) out.push_back(' ');
            out += std::to_string(g + 1);
            first = false;
            g = a.image[g];
        }
        out.push_back(')');
    }
    return out.empty() ? "()" : out;
}

namespace {

int position_of(const std::vector<int>& cycle, int value)
{
    auto it = std::find(cycle.begin(), cycle.end(), value);
    return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

// Propagate the seed flag (facet 0 -> g0, first boundary neighbour of 0 ->
// position pos in g0's cycle, sign s) across the adjacency graph.  Returns
// the completed facet map or nothing when the seed is inconsistent.
bool propagate(const Polytope& p, const Polytope& q, int g0, int pos, int s,
               std::vector<int>& img)
{
    int m = p.facet_count();
    img.assign(m, -1);
    img[0] = g0;

    const auto& c0 = p.rotation(0);
    const auto& d0 = q.rotation(g0);
    int deg = static_cast<int>(c0.size());
    if (static_cast<int>(d0.size()) != deg) return false;
    for (int t = 0; t < deg; ++t) {
        int v = c0[t];
        int w = d0[((pos + s * t) % deg + deg) % deg];
        if (img[v] >= 0 && img[v] != w) return false;
        img[v] = w;
    }

    std::vector<int> queue = c0;
    std::vector<bool> done(m, false);
    done[0] = true;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        if (done[f]) continue;
        done[f] = true;
        const auto& cf = p.rotation(f);
        const auto& cg = q.rotation(img[f]);
        int d = static_cast<int>(cf.size());
        if (static_cast<int>(cg.size()) != d) return false;
        int anchor = -1;
        for (int i = 0; i < d && anchor < 0; ++i)
            if (img[cf[i]] >= 0) anchor = i;
        int j = position_of(cg, img[cf[anchor]]);
        if (j < 0) return false;
        for (int t = 0; t < d; ++t) {
            int v = cf[(anchor + t) % d];
            int w = cg[((j + s * t) % d + d) % d];
            if (img[v] < 0) {
                img[v] = w;
                queue.push_back(v);
            } else if (img[v] != w) {
                return false;
            }
        }
    }

    std::vector<bool> hit(m, false);
    for (int f = 0; f < m; ++f) {
        if (img[f] < 0 || hit[img[f]]) return false;
        hit[img[f]] = true;
    }
    for (const auto& t : p.vertices())
        if (q.vertex_index({img[t[0]], img[t[1]], img[t[2]]}) < 0) return false;
    return true;
}

}  // namespace

std::vector<FacetMap> isomorphisms(const Polytope& p, const Polytope& q)
{
    std::vector<FacetMap> result;
    if (p.facet_count() != q.facet_count() || p.vertices().size() != q.vertices().size() ||
        p.edges().size() != q.edges().size())
        return result;
    int deg = static_cast<int>(p.rotation(0).size());
    std::vector<int> img;
    for (int g0 = 0; g0 < q.facet_count(); ++g0) {
        if (static_cast<int>(q.rotation(g0).size()) != deg) continue;
        for (int pos = 0; pos < deg; ++pos)
            for (int s : {1, -1})
                if (propagate(p, q, g0, pos, s, img)) result.push_back(FacetMap{img});
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<FacetMap> automorphisms(const Polytope& p) { return isomorphisms(p, p); }

int orientation_character(const Polytope& p, const FacetMap& a)
{
    const auto& c = p.rotation(0);
    const auto& d = p.rotation(a(0));
    int deg = static_cast<int>(c.size());
    int j = position_of(d, a(c[0]));
    if (j < 0) throw std::invalid_argument("orientation_character: not an automorphism");
    if (a(c[1]) == d[(j + 1) % deg]) return 1;
    if (a(c[1]) == d[(j + deg - 1) % deg]) return -1;
    throw std::invalid_argument("orientation_character: not an automorphism");
}

InvariantCells invariant_cells(const Polytope& p, const FacetMap& a)
{
    InvariantCells cells;
    for (int f = 0; f < p.facet_count(); ++f)
        if (a(f) == f) cells.facets.push_back(f);
    const auto& edges = p.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [f, g] = edges[i];
        if (std::minmax(a(f), a(g)) == std::minmax(f, g))
            cells.edges.push_back(static_cast<int>(i));
    }
    const auto& verts = p.vertices();
    for (size_t i = 0; i < verts.size(); ++i) {
        std::array<int, 3> t = {a(verts[i][0]), a(verts[i][1]), a(verts[i][2])};
        std::sort(t.begin(), t.end());
        if (t == verts[i]) cells.vertices.push_back(static_cast<int>(i));
    }
    return cells;
}

namespace {

enum class CellType { face, edge, vertex };

// Pole types of a rotation: the two setwise invariant cells.
std::pair<CellType, CellType> pole_types(const InvariantCells& cells)
{
    if (cells.total() != 2)
        throw std::invalid_argument("classify: rotation with invariant cell count != 2");
    std::vector<CellType> t;
    for (size_t i = 0; i < cells.facets.size(); ++i) t.push_back(CellType::face);
    for (size_t i = 0; i < cells.edges.size(); ++i) t.push_back(CellType::edge);
    for (size_t i = 0; i < cells.vertices.size(); ++i) t.push_back(CellType::vertex);
    return {t[0], t[1]};
}

}  // namespace

SymmetryClass classify(const Polytope& p, const FacetMap& a)
{
    SymmetryClass c;
    c.order = map_order(a);
    if (c.order == 1) return c;
    c.epsilon = orientation_character(p, a);
    if (c.epsilon == 1) {
        auto [t1, t2] = pole_types(invariant_cells(p, a));
        if (t1 == CellType::face && t2 == CellType::face)
            c.kind = SymmetryKind::face_rotation;
        else if (t1 == CellType::edge && t2 == CellType::edge)
            c.kind = SymmetryKind::edge_rotation;
        else if (t1 == CellType::vertex && t2 == CellType::vertex)
            c.kind = SymmetryKind::vertex_rotation;
        else if ((t1 == CellType::face && t2 == CellType::edge) ||
                 (t1 == CellType::edge && t2 == CellType::face))
            c.kind = SymmetryKind::face_edge_rotation;
        else if ((t1 == CellType::face && t2 == CellType::vertex) ||
                 (t1 == CellType::vertex && t2 == CellType::face))
            c.kind = SymmetryKind::face_vertex_rotation;
        else
            throw std::invalid_argument("classify: rotation poles in an edge and a vertex");
        return c;
    }
    if (c.order == 2) {
        c.kind = invariant_cells(p, a).total() ? SymmetryKind::reflection
                                               : SymmetryKind::antipodal;
        return c;
    }
    auto [t1, t2] = pole_types(invariant_cells(p, compose(a, a)));
    if (t1 != t2)
        throw std::invalid_argument("classify: rotoreflection square with mixed pole types");
    switch (t1) {
        case CellType::edge: c.kind = SymmetryKind::edge_rotoreflection; break;
        case CellType::vertex: c.kind = SymmetryKind::vertex_rotoreflection; break;
        case CellType::face: c.kind = SymmetryKind::face_rotoreflection; break;
    }
    return c;
}

std::string kind_name(SymmetryKind k)
{
    switch (k) {
        case SymmetryKind::identity: return "identity";
        case SymmetryKind::face_rotation: return "face_rotation";
        case SymmetryKind::edge_rotation: return "edge_rotation";
        case SymmetryKind::vertex_rotation: return "vertex_rotation";
        case SymmetryKind::face_edge_rotation: return "face_edge_rotation";
        case SymmetryKind::face_vertex_rotation: return "face_vertex_rotation";
        case SymmetryKind::reflection: return "reflection";
        case SymmetryKind::antipodal: return "antipodal";
        case SymmetryKind::edge_rotoreflection: return "edge_rotoreflection";
        case SymmetryKind::vertex_rotoreflection: return "vertex_rotoreflection";
        case SymmetryKind::face_rotoreflection: return "face_rotoreflection";
    }
    throw std::logic_error("kind_name: bad enum");
}

std::vector<int> fix_facets(const Polytope& p, const FacetMap& a)
{
    auto cells = invariant_cells(p, a);
    std::set<int> out(cells.facets.begin(), cells.facets.end());
    for (int i : cells.edges) {
        out.insert(p.edges()[i].first);
        out.insert(p.edges()[i].second);
    }
    for (int i : cells.vertices)
        for (int f : p.vertices()[i]) out.insert(f);
    return {out.begin(), out.end()};
}

}  // namespace qhs
