#include "qhs/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qhs {

namespace {

std::array<int, 3> sorted_triple(std::array<int, 3> t)
{
    std::sort(t.begin(), t.end());
    return t;
}

// Facet pair -> number of vertex triples containing it.
std::map<std::pair<int, int>, int> pair_counts(const PolytopeData& data)
{
    std::map<std::pair<int, int>, int> counts;
    for (const auto& t : data.vertices) {
        auto s = sorted_triple(t);
        ++counts[{s[0], s[1]}];
        ++counts[{s[0], s[2]}];
        ++counts[{s[1], s[2]}];
    }
    return counts;
}

}  // namespace

std::vector<std::string> validate(const PolytopeData& data)
{
    std::vector<std::string> violations;
    if (data.m < 4 || data.m > 32) {
        violations.push_back("facet_count_limit");
        return violations;
    }

    bool format_ok = true;
    std::set<std::array<int, 3>> seen;
    for (const auto& t : data.vertices) {
        auto s = sorted_triple(t);
        if (s[0] < 1 || s[2] > data.m || s[0] == s[1] || s[1] == s[2]) format_ok = false;
        if (!seen.insert(s).second) format_ok = false;
    }
    if (!format_ok) {
        violations.push_back("vertex_format");
        return violations;
    }

    std::vector<int> degree(data.m + 1, 0);
    for (const auto& t : data.vertices)
        for (int f : t) ++degree[f];
    for (int f = 1; f <= data.m; ++f)
        if (degree[f] < 3) {
            violations.push_back("facet_degree");
            break;
        }

    auto counts = pair_counts(data);
    bool simple = true;
    int e = 0;
    for (const auto& [pair, c] : counts) {
        if (c > 2) simple = false;
        if (c == 2) ++e;
    }
    if (!simple) violations.push_back("simplicity");

    int v = static_cast<int>(data.vertices.size());
    if (v - e + data.m != 2) violations.push_back("euler");

    // Each facet's neighbours, with the link adjacency given by shared
    // vertices, must form one closed cycle.
    bool cycles_ok = true;
    for (int f = 1; f <= data.m && cycles_ok; ++f) {
        std::map<int, std::vector<int>> link;
        for (const auto& t : data.vertices) {
            auto s = sorted_triple(t);
            if (s[0] == f) {
                link[s[1]].push_back(s[2]);
                link[s[2]].push_back(s[1]);
            } else if (s[1] == f) {
                link[s[0]].push_back(s[2]);
                link[s[2]].push_back(s[0]);
            } else if (s[2] == f) {
                link[s[0]].push_back(s[1]);
                link[s[1]].push_back(s[0]);
            }
        }
        for (const auto& [g, nb] : link)
            if (nb.size() != 2) cycles_ok = false;
        if (!cycles_ok || link.empty()) {
            cycles_ok = false;
            break;
        }
        // Walk the link from its smallest member; it must close after
        // visiting every neighbour exactly once.
        int start = link.begin()->first;
        int prev = start, cur = link[start][0];
        size_t steps = 1;
        while (cur != start && steps <= link.size()) {
            const auto& nb = link[cur];
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++steps;
        }
        if (cur != start || steps != link.size()) cycles_ok = false;
    }
    if (!cycles_ok) violations.push_back("facet_cycle");

    // Facet adjacency graph connectivity.
    std::vector<std::vector<int>> adj(data.m + 1);
    for (const auto& [pair, c] : counts)
        if (c == 2) {
            adj[pair.first].push_back(pair.second);
            adj[pair.second].push_back(pair.first);
        }
    std::vector<bool> reached(data.m + 1, false);
    std::vector<int> queue = {1};
    reached[1] = true;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (int g : adj[f])
            if (!reached[g]) {
                reached[g] = true;
                queue.push_back(g);
            }
    }
    for (int f = 1; f <= data.m; ++f)
        if (!reached[f]) {
            violations.push_back("connectivity");
            break;
        }

    return violations;
}

bool Polytope::adjacent(int f, int g) const
{
    if (f > g) std::swap(f, g);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(f, g));
}

int Polytope::vertex_index(std::array<int, 3> triple) const
{
    auto s = sorted_triple(triple);
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
    if (it == vertices_.end() || *it != s) return -1;
    return static_cast<int>(it - vertices_.begin());
}

int Polytope::edge_index(int f, int g) const
{
    if (f > g) std::swap(f, g);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(f, g));
    if (it == edges_.end() || *it != std::make_pair(f, g)) return -1;
    return static_cast<int>(it - edges_.begin());
}

PolytopeData Polytope::data() const
{
    PolytopeData d;
    d.name = name_;
    d.m = m_;
    for (const auto& t : vertices_) d.vertices.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    return d;
}

Polytope Polytope::build(PolytopeData data)
{
    auto violations = validate(data);
    if (!violations.empty()) {
        std::string msg = "invalid polytope data:";
        for (const auto& v : violations) msg += " " + v;
        throw std::invalid_argument(msg);
    }

    Polytope p;
    p.name_ = data.name;
    p.m_ = data.m;
    for (const auto& t : data.vertices) {
        auto s = sorted_triple(t);
        p.vertices_.push_back({s[0] - 1, s[1] - 1, s[2] - 1});
    }
    std::sort(p.vertices_.begin(), p.vertices_.end());

    std::map<std::pair<int, int>, int> counts;
    for (const auto& t : p.vertices_) {
        ++counts[{t[0], t[1]}];
        ++counts[{t[0], t[2]}];
        ++counts[{t[1], t[2]}];
    }
    p.adj_.assign(p.m_, {});
    for (const auto& [pair, c] : counts)
        if (c == 2) {
            p.edges_.push_back(pair);
            p.adj_[pair.first].push_back(pair.second);
            p.adj_[pair.second].push_back(pair.first);
        }
    for (auto& nb : p.adj_) std::sort(nb.begin(), nb.end());

    // Raw boundary cycle per facet: walk the link, starting at the smallest
    // neighbour and stepping first to the smaller of its two partners.
    std::vector<std::vector<int>> raw(p.m_);
    for (int f = 0; f < p.m_; ++f) {
        std::map<int, std::array<int, 2>> link;
        for (const auto& t : p.vertices_) {
            int a = -1, b = -1;
            if (t[0] == f) {
                a = t[1];
                b = t[2];
            } else if (t[1] == f) {
                a = t[0];
                b = t[2];
            } else if (t[2] == f) {
                a = t[0];
                b = t[1];
            } else {
                continue;
            }
            auto add = [&](int x, int y) {
                auto it = link.find(x);
                if (it == link.end())
                    link[x] = {y, -1};
                else
                    it->second[1] = y;
            };
            add(a, b);
            add(b, a);
        }
        int start = link.begin()->first;
        auto first_pair = link[start];
        int next = std::min(first_pair[0], first_pair[1]);
        std::vector<int> cycle = {start, next};
        int prev = start;
        while (true) {
            auto nb = link[cycle.back()];
            int nxt = (nb[0] == prev) ? nb[1] : nb[0];
            if (nxt == start) break;
            prev = cycle.back();
            cycle.push_back(nxt);
        }
        raw[f] = std::move(cycle);
    }

    // Orient the cycles consistently: facet f traverses its edge to
    // neighbour c[i] from vertex {f, c[i-1], c[i]} to vertex {f, c[i], c[i+1]};
    // the two facets of an edge must traverse it in opposite directions.
    auto traversal = [&p](int f, const std::vector<int>& cycle, int i) {
        int d = static_cast<int>(cycle.size());
        int from = p.vertex_index({f, cycle[(i + d - 1) % d], cycle[i]});
        int to = p.vertex_index({f, cycle[i], cycle[(i + 1) % d]});
        return std::make_pair(from, to);
    };

    std::vector<int> flip(p.m_, -1);  // -1 unresolved, 0 keep raw, 1 reverse
    flip[0] = 0;
    std::vector<int> queue = {0};
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        std::vector<int> cycle = raw[f];
        if (flip[f]) std::reverse(cycle.begin(), cycle.end());
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
            int g = cycle[i];
            auto [vf, vt] = traversal(f, cycle, i);
            // Locate f in g's raw cycle and compare directions.
            const auto& gc = raw[g];
            int pos = static_cast<int>(std::find(gc.begin(), gc.end(), f) - gc.begin());
            auto [gf, gt] = traversal(g, gc, pos);
            int needed = (gf == vt && gt == vf) ? 0 : 1;
            if (needed == 1 && !(gf == vf && gt == vt))
                throw std::logic_error("rotation system propagation failed");
            if (flip[g] < 0) {
                flip[g] = needed;
                queue.push_back(g);
            } else if (flip[g] != needed) {
                throw std::logic_error("rotation system is inconsistent");
            }
        }
    }
    p.rotation_.resize(p.m_);
    for (int f = 0; f < p.m_; ++f) {
        p.rotation_[f] = raw[f];
        if (flip[f] == 1) std::reverse(p.rotation_[f].begin(), p.rotation_[f].end());
    }
    return p;
}

DualComplex dual_complex(const Polytope& p)
{
    DualComplex k;
    k.vertex_count = p.facet_count();
    k.edges = p.edges();
    k.triangles = p.vertices();
    return k;
}

Polytope build_cube()
{
    PolytopeData d;
    d.name = "cube";
    d.m = 6;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) d.vertices.push_back({1 + a, 3 + b, 5 + c});
    return Polytope::build(std::move(d));
}

Polytope build_simplex3()
{
    PolytopeData d;
    d.name = "simplex3";
    d.m = 4;
    d.vertices = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    return Polytope::build(std::move(d));
}

Polytope build_lobell(int n)
{
    if (n < 5) throw std::invalid_argument("build_lobell: N must be >= 5");
    if (2 * n + 2 > 32) throw std::invalid_argument("build_lobell: N too large (m <= 32)");
    PolytopeData d;
    d.name = "lobell:" + std::to_string(n);
    d.m = 2 * n + 2;
    auto u = [n](int i) { return 2 + ((i % n) + n) % n; };
    auto l = [n](int j) { return n + 2 + ((j % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        d.vertices.push_back({1, u(i), u(i + 1)});
        d.vertices.push_back({2 * n + 2, l(i), l(i + 1)});
        d.vertices.push_back({u(i), u(i + 1), l(i)});
        d.vertices.push_back({l(i), l(i + 1), u(i + 1)});
    }
    return Polytope::build(std::move(d));
}

Polytope build_dodecahedron()
{
    // Same two-ring structure as build_lobell(5) but with the mirrored ring
    // alignment, so the labelled complexes differ while staying isomorphic.
    PolytopeData d;
    d.name = "dodecahedron";
    d.m = 12;
    auto u = [](int i) { return 2 + ((i % 5) + 5) % 5; };
    auto l = [](int j) { return 7 + ((j % 5) + 5) % 5; };
    for (int i = 0; i < 5; ++i) {
        d.vertices.push_back({1, u(i), u(i + 1)});
        d.vertices.push_back({12, l(i), l(i + 1)});
        d.vertices.push_back({u(i), u(i + 1), l(-i)});
        d.vertices.push_back({l(i), l(i + 1), u(-i)});
    }
    return Polytope::build(std::move(d));
}

}  // namespace qhs
