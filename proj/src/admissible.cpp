#include "qhs/admissible.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qhs/homology.hpp"

namespace qhs {

namespace {

void check_facets(const Polytope& p, const Colouring& c)
{
    if (c.facet_count() != p.facet_count())
        throw std::invalid_argument("colouring does not match the polytope's facet count");
}

bool is_rotation(SymmetryKind k)
{
    return k == SymmetryKind::face_rotation || k == SymmetryKind::edge_rotation ||
           k == SymmetryKind::vertex_rotation || k == SymmetryKind::face_edge_rotation ||
           k == SymmetryKind::face_vertex_rotation;
}

struct GroupSig {
    const char* name;
    int order;
    bool abelian;
    std::vector<std::pair<int, int>> orders;  // (element order, count)
};

// Non-cyclic groups only; cyclic ones are matched by their Euler-phi
// signature.  Within a fixed (order, abelianness) all listed multisets are
// pairwise distinct, which is what makes the lookup sound.
const std::vector<GroupSig>& group_table()
{
    static const std::vector<GroupSig> t = {
        {"Z2xZ2", 4, true, {{1, 1}, {2, 3}}},
        {"S3", 6, false, {{1, 1}, {2, 3}, {3, 2}}},
        {"Z4xZ2", 8, true, {{1, 1}, {2, 3}, {4, 4}}},
        {"Z2^3", 8, true, {{1, 1}, {2, 7}}},
        {"D8", 8, false, {{1, 1}, {2, 5}, {4, 2}}},
        {"Q8", 8, false, {{1, 1}, {2, 1}, {4, 6}}},
        {"Z3xZ3", 9, true, {{1, 1}, {3, 8}}},
        {"D10", 10, false, {{1, 1}, {2, 5}, {5, 4}}},
        {"Z6xZ2", 12, true, {{1, 1}, {2, 3}, {3, 2}, {6, 6}}},
        {"A4", 12, false, {{1, 1}, {2, 3}, {3, 8}}},
        {"D12", 12, false, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}},
        {"Dic3", 12, false, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}},
        {"D14", 14, false, {{1, 1}, {2, 7}, {7, 6}}},
        {"Z8xZ2", 16, true, {{1, 1}, {2, 3}, {4, 4}, {8, 8}}},
        {"Z4xZ4", 16, true, {{1, 1}, {2, 3}, {4, 12}}},
        {"Z4xZ2xZ2", 16, true, {{1, 1}, {2, 7}, {4, 8}}},
        {"Z2^4", 16, true, {{1, 1}, {2, 15}}},
        {"D16", 16, false, {{1, 1}, {2, 9}, {4, 2}, {8, 4}}},
        {"S4", 24, false, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}},
        {"A4xZ2", 24, false, {{1, 1}, {2, 7}, {3, 8}, {6, 8}}},
        {"SL(2,3)", 24, false, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}},
        {"D24", 24, false, {{1, 1}, {2, 13}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}},
        {"Z12xZ2", 24, true, {{1, 1}, {2, 3}, {3, 2}, {4, 4}, {6, 6}, {12, 8}}},
        {"Z6xZ2xZ2", 24, true, {{1, 1}, {2, 7}, {3, 2}, {6, 14}}},
        {"S3xZ4", 24, false, {{1, 1}, {2, 7}, {3, 2}, {4, 8}, {6, 2}, {12, 4}}},
        {"Z3xD8", 24, false, {{1, 1}, {2, 5}, {3, 2}, {4, 2}, {6, 10}, {12, 4}}},
        {"Z3xQ8", 24, false, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}, {12, 12}}},
        {"Dic12", 24, false, {{1, 1}, {2, 1}, {3, 2}, {4, 14}, {6, 2}, {12, 4}}},
        {"Z2xS4", 48, false, {{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}}},
    };
    return t;
}

int euler_phi(int n)
{
    int out = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out -= out / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) out -= out / n;
    return out;
}

}  // namespace

std::optional<gf2::SquareGF2> induced_linear_map(const Polytope& p, const Colouring& c,
                                                 const FacetMap& phi)
{
    check_facets(p, c);
    if (static_cast<int>(phi.image.size()) != p.facet_count())
        throw std::invalid_argument("facet map does not match the polytope's facet count");

    int k = c.k;
    gf2::SpanBasis span;
    std::vector<int> basis_facets;
    for (int f = 0; f < c.facet_count() && static_cast<int>(basis_facets.size()) < k; ++f) {
        if (span.insert(c.colour(f).bits)) basis_facets.push_back(f);
    }

    gf2::SquareGF2 before(k);
    gf2::SquareGF2 after(k);
    for (int i = 0; i < k; ++i) {
        before.cols[i] = c.colour(basis_facets[i]);
        after.cols[i] = c.colour(phi(basis_facets[i]));
    }
    if (!gf2::invertible(after)) return std::nullopt;
    gf2::SquareGF2 a = after * gf2::inverse(before);
    for (int f = 0; f < c.facet_count(); ++f) {
        if (!(a.apply(c.colour(f)) == c.colour(phi(f)))) return std::nullopt;
    }
    return a;
}

bool is_good(const Polytope& p, const Colouring& c, const FacetMap& phi)
{
    check_facets(p, c);
    gf2::SpanBasis span;
    for (int f : fix_facets(p, phi)) span.insert(c.colour(f).bits);
    return span.dim() < c.k;
}

const SymElement* SymGroupReport::find(const FacetMap& phi) const
{
    for (const SymElement& el : elements) {
        if (el.phi == phi) return &el;
    }
    return nullptr;
}

SymGroupReport admissible_group(const Polytope& p, const Colouring& c)
{
    SymGroupReport rep;
    for (const FacetMap& phi : automorphisms(p)) {
        auto a = induced_linear_map(p, c, phi);
        if (!a) continue;
        rep.elements.push_back({phi, *a, classify(p, phi), is_good(p, c, phi)});
    }
    rep.group_order = static_cast<int>(rep.elements.size());

    std::vector<int> orders;
    for (const SymElement& el : rep.elements) orders.push_back(el.cls.order);
    bool abelian = true;
    for (const SymElement& x : rep.elements) {
        for (const SymElement& y : rep.elements) {
            if (!(compose(x.phi, y.phi) == compose(y.phi, x.phi))) {
                abelian = false;
                break;
            }
        }
        if (!abelian) break;
    }
    rep.identified_name = identify_group(orders, abelian, rep.group_order);
    rep.coloured_isometry_order = static_cast<long long>(rep.group_order) << c.k;
    return rep;
}

std::string identify_group(const std::vector<int>& orders, bool abelian, int group_order)
{
    std::map<int, int> counts;
    for (int o : orders) ++counts[o];

    if (group_order == 1 && counts == std::map<int, int>{{1, 1}}) return "trivial";

    if (abelian && static_cast<int>(orders.size()) == group_order) {
        std::map<int, int> cyclic;
        for (int d = 1; d <= group_order; ++d) {
            if (group_order % d == 0) cyclic[d] = euler_phi(d);
        }
        if (counts == cyclic) return "Z" + std::to_string(group_order);
    }

    for (const GroupSig& sig : group_table()) {
        if (sig.order != group_order || sig.abelian != abelian) continue;
        std::map<int, int> want(sig.orders.begin(), sig.orders.end());
        if (counts == want) return sig.name;
    }

    std::string out = "unrecognized(order=" + std::to_string(group_order) +
                      ", abelian=" + (abelian ? "yes" : "no") + ", orders=";
    bool first = true;
    for (auto [o, n] : counts) {
        if (!first) out += " ";
        out += std::to_string(o) + "^" + std::to_string(n);
        first = false;
    }
    return out + ")";
}

AuditReport obstruction_audit(const Polytope& p, const Colouring& c)
{
    if (!is_proper(p, c))
        throw std::invalid_argument("obstruction audit: colouring is not proper");
    if (!is_orientable(p, c))
        throw std::invalid_argument("obstruction audit: colouring is not orientable");
    if (!is_qhs(p, c))
        throw std::invalid_argument(
            "obstruction audit: colouring is not a rational homology sphere");

    SymGroupReport rep = admissible_group(p, c);
    AuditReport out;
    auto flag = [&](const std::string& what, const FacetMap& phi) {
        out.violations.push_back(what + " at " + cycle_notation(phi));
    };

    int k = c.k;
    std::set<gf2::SquareGF2> images;
    for (const SymElement& el : rep.elements) {
        SymmetryKind kind = el.cls.kind;
        int order = el.cls.order;
        images.insert(el.psi);

        if (kind == SymmetryKind::reflection) flag("reflection is admissible", el.phi);
        if (kind == SymmetryKind::antipodal) flag("antipodal map is admissible", el.phi);
        if (el.good && order == 2) flag("good element of order 2", el.phi);
        if (el.good && order > 1 && kind != SymmetryKind::edge_rotoreflection &&
            !(is_rotation(kind) && order % 2 == 1))
            flag("good element that is neither an edge rotoreflection nor an odd rotation",
                 el.phi);
        if (kind == SymmetryKind::face_rotation && order % 2 == 0)
            flag("face rotation of even order", el.phi);
        if (kind == SymmetryKind::face_rotoreflection ||
            kind == SymmetryKind::vertex_rotoreflection)
            flag("rotoreflection other than the edge kind", el.phi);
        if (gf2::matrix_order(el.psi) != order)
            flag("Psi image with a different order", el.phi);
        if (k >= 5 && kind == SymmetryKind::edge_rotation && !el.good)
            flag("bad edge rotation at rank >= 5", el.phi);
        if (kind == SymmetryKind::face_edge_rotation && !el.good && k != 3)
            flag("bad face-edge rotation away from rank 3", el.phi);
        if (k >= 5 && kind == SymmetryKind::edge_rotoreflection)
            flag("edge rotoreflection at rank >= 5", el.phi);
    }
    if (static_cast<int>(images.size()) != rep.group_order)
        out.violations.push_back("Psi is not injective");
    if (k >= 5 && rep.group_order % 2 == 0)
        out.violations.push_back("even group order at rank >= 5");
    return out;
}

}  // namespace qhs
