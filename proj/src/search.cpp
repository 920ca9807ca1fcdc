#include "qhs/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <thread>

#include "qhs/homology.hpp"

namespace qhs {

namespace {

constexpr uint32_t unset = ~uint32_t(0);

// Union-find forests on the facets, one per unordered colour pair, with an
// undo log so the search can rewind on backtrack.  A cycle in the graph
// G_{c,c'} (facets coloured c or c', edges from facet adjacency) can never
// be repaired by colouring more facets, which is what makes pruning on it
// sound; the no-pruning equivalence test in the suite guards this.
struct PairForests {
    int m = 0;
    std::map<uint64_t, int> index;
    std::vector<std::vector<int>> parent;
    std::vector<std::pair<int, int>> log;  // forest, node that lost root status

    explicit PairForests(int facets) : m(facets) {}

    int forest(uint32_t a, uint32_t b)
    {
        if (a > b) std::swap(a, b);
        uint64_t key = (uint64_t(a) << 32) | b;
        auto [it, fresh] = index.try_emplace(key, static_cast<int>(parent.size()));
        if (fresh) {
            parent.emplace_back(m);
            for (int i = 0; i < m; ++i) parent.back()[i] = i;
        }
        return it->second;
    }

    int find(int fi, int x) const
    {
        while (parent[fi][x] != x) x = parent[fi][x];
        return x;
    }

    // Adds edge x-y to the graph of the pair {a, b}; false iff it closes a
    // cycle (nothing is recorded then).
    bool unite(uint32_t a, uint32_t b, int x, int y)
    {
        int fi = forest(a, b);
        int rx = find(fi, x);
        int ry = find(fi, y);
        if (rx == ry) return false;
        parent[fi][rx] = ry;
        log.emplace_back(fi, rx);
        return true;
    }

    size_t mark() const { return log.size(); }

    void rewind(size_t to)
    {
        while (log.size() > to) {
            auto [fi, node] = log.back();
            log.pop_back();
            parent[fi][node] = node;
        }
    }
};

struct CensusPlan {
    const Polytope* p = nullptr;
    int k = 0;
    bool qhs = false;
    bool prune = false;
    std::vector<int> order;                 // position -> facet
    std::vector<std::vector<int>> earlier;  // position -> coloured neighbours
};

CensusPlan make_plan(const EnumerationTask& task)
{
    if (!task.polytope) throw std::invalid_argument("enumeration: no polytope");
    if (task.k < 1 || task.k > 5)
        throw std::invalid_argument("enumeration supports ranks 1 to 5 only");
    const Polytope& p = *task.polytope;

    std::array<int, 3> base = task.base;
    if (base == std::array<int, 3>{-1, -1, -1}) {
        base = p.vertices().front();
    } else {
        std::array<int, 3> sorted = base;
        std::sort(sorted.begin(), sorted.end());
        if (p.vertex_index(sorted) < 0)
            throw std::invalid_argument("enumeration: base is not a vertex");
    }

    CensusPlan plan;
    plan.p = &p;
    plan.k = task.k;
    plan.qhs = task.qhs;
    plan.prune = task.qhs && task.qhs_pruning;

    int m = p.facet_count();
    std::vector<char> seen(m, 0);
    std::deque<int> queue;
    for (int f : base) {
        queue.push_back(f);
        seen[f] = 1;
    }
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        plan.order.push_back(f);
        std::vector<int> next = p.neighbours(f);
        std::sort(next.begin(), next.end());
        for (int g : next)
            if (!seen[g]) {
                seen[g] = 1;
                queue.push_back(g);
            }
    }

    std::vector<char> coloured(m, 0);
    plan.earlier.resize(m);
    for (size_t i = 0; i < plan.order.size(); ++i) {
        for (int g : p.neighbours(plan.order[i]))
            if (coloured[g]) plan.earlier[i].push_back(g);
        coloured[plan.order[i]] = 1;
    }
    return plan;
}

struct Walker {
    const CensusPlan& plan;
    const CanonicalContext& ctx;
    std::array<uint32_t, 32> col{};
    PairForests uf;
    std::set<std::string> keys;

    Walker(const CensusPlan& pl, const CanonicalContext& cx)
        : plan(pl), ctx(cx), uf(pl.p->facet_count())
    {
    }

    // Tries colour v at position pos.  On failure some unions may already be
    // logged; the caller rewinds to its own mark either way.
    bool apply(int pos, uint32_t v)
    {
        for (int g : plan.earlier[pos])
            if (col[g] == v) return false;
        if (plan.prune) {
            int f = plan.order[pos];
            for (int g : plan.earlier[pos])
                if (!uf.unite(v, col[g], f, g)) return false;
        }
        col[plan.order[pos]] = v;
        return true;
    }

    void run(int pos, int d)
    {
        int m = plan.p->facet_count();
        if (pos == m) {
            leaf();
            return;
        }
        int remaining = m - pos - 1;
        uint32_t lim = 1u << d;
        // odd colours in the current span, then the fresh basis vector
        for (uint32_t v = 1; v <= lim; ++v) {
            bool fresh = v == lim;
            if (fresh) {
                if (d == plan.k) break;
            } else if (!(std::popcount(v) & 1u)) {
                continue;
            }
            int nd = d + (fresh ? 1 : 0);
            if (nd + remaining < plan.k) continue;
            size_t mk = uf.mark();
            if (apply(pos, v)) run(pos + 1, nd);
            uf.rewind(mk);
        }
    }

    void leaf()
    {
        const Polytope& p = *plan.p;
        int m = p.facet_count();
        std::vector<gf2::BitVec> colours(m);
        for (int f = 0; f < m; ++f) colours[f] = {col[f], plan.k};
        Colouring c(plan.k, std::move(colours));
        if (plan.qhs && !is_qhs(p, c)) return;
        keys.insert(ctx.form(c));
    }
};

ClassList classes_from_keys(const Polytope& p, const std::set<std::string>& keys)
{
    ClassList out;
    out.reserve(keys.size());
    for (const std::string& key : keys) {
        Colouring rep = colouring_from_matrix(gf2::parse_matrix(key));
        out.push_back({rep, key, admissible_group(p, rep), betti_manifold(p, rep)});
    }
    return out;
}

}  // namespace

ClassList enumerate_colourings(const EnumerationTask& task)
{
    CensusPlan plan = make_plan(task);
    const Polytope& p = *plan.p;
    int m = p.facet_count();
    // every vertex needs three independent colours
    if (plan.k < 3) return {};
    CanonicalContext ctx(p, plan.k, GlMode::gl_or);

    // Disjoint work units: all live partial assignments of the first few
    // positions, grown level by level until there are enough to go around.
    // Prefixes skip the union-find; workers replay them with it.
    int threads = std::max(1, task.threads);
    int target = threads == 1 ? 1 : 4 * threads;
    std::vector<std::vector<uint32_t>> prefixes = {{}};
    int depth = 0;
    while (depth < m && static_cast<int>(prefixes.size()) < target) {
        std::vector<std::vector<uint32_t>> next;
        for (const auto& pre : prefixes) {
            std::array<uint32_t, 32> col{};
            int d = 0;
            for (int i = 0; i < depth; ++i) {
                if (pre[i] == (1u << d)) ++d;
                col[plan.order[i]] = pre[i];
            }
            int remaining = m - depth - 1;
            uint32_t lim = 1u << d;
            for (uint32_t v = 1; v <= lim; ++v) {
                bool fresh = v == lim;
                if (fresh) {
                    if (d == plan.k) break;
                } else if (!(std::popcount(v) & 1u)) {
                    continue;
                }
                if (d + (fresh ? 1 : 0) + remaining < plan.k) continue;
                bool clash = false;
                for (int g : plan.earlier[depth])
                    if (col[g] == v) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                next.push_back(pre);
                next.back().push_back(v);
            }
        }
        prefixes = std::move(next);
        ++depth;
        if (prefixes.empty()) return {};
    }

    std::vector<std::set<std::string>> found(threads);
    auto work = [&](int w) {
        Walker walker(plan, ctx);
        for (size_t i = w; i < prefixes.size(); i += threads) {
            const auto& pre = prefixes[i];
            int d = 0;
            bool alive = true;
            for (size_t j = 0; j < pre.size() && alive; ++j) {
                bool fresh = pre[j] == (1u << d);
                alive = walker.apply(static_cast<int>(j), pre[j]);
                if (fresh) ++d;
            }
            if (alive) walker.run(depth, d);
            walker.uf.rewind(0);
        }
        found[w] = std::move(walker.keys);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::set<std::string> keys;
    for (auto& part : found) keys.merge(part);
    return classes_from_keys(p, keys);
}

std::map<std::string, int> classify_by_symmetry(const ClassList& classes)
{
    std::map<std::string, int> hist;
    for (const ClassEntry& e : classes) ++hist[e.sym.identified_name];
    return hist;
}

ConstructReport construct_with_symmetry(const Polytope& p, const FacetMap& phi, int k,
                                        const std::vector<std::pair<int, gf2::BitVec>>& seed,
                                        bool qhs)
{
    int m = p.facet_count();
    if (k < 1 || k > 5) throw std::invalid_argument("construct supports ranks 1 to 5 only");
    std::vector<FacetMap> group = automorphisms(p);
    if (std::find(group.begin(), group.end(), phi) == group.end())
        throw std::invalid_argument("construct: not an automorphism of the polytope");

    std::vector<uint32_t> seeded(m, unset);
    for (const auto& [f, v] : seed) {
        if (f < 0 || f >= m) throw std::invalid_argument("construct: seed facet out of range");
        if (v.len != k) throw std::invalid_argument("construct: seed colour length mismatch");
        if (!v.odd_weight())
            throw std::invalid_argument("construct: seed colours must have odd weight");
        if (seeded[f] != unset && seeded[f] != v.bits)
            throw std::invalid_argument("construct: facet seeded twice with different colours");
        seeded[f] = v.bits;
    }

    // phi-orbits in cycle order, each starting at its smallest facet
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(m, 0);
    for (int f = 0; f < m; ++f) {
        if (seen[f]) continue;
        std::vector<int> orb;
        for (int g = f; !seen[g]; g = phi(g)) {
            seen[g] = 1;
            orb.push_back(g);
        }
        orbits.push_back(std::move(orb));
    }

    int order = map_order(phi);
    std::vector<std::pair<gf2::BitVec, gf2::BitVec>> constraints;
    for (int f = 0; f < m; ++f)
        if (seeded[f] != unset && seeded[phi(f)] != unset)
            constraints.emplace_back(gf2::BitVec{seeded[f], k}, gf2::BitVec{seeded[phi(f)], k});
    std::vector<gf2::SquareGF2> mats = gf2::matrices_with_constraints(k, order, constraints);

    // Conjugating A by an orientation preserving M that fixes every seed
    // colour maps the solution family of A onto its image under M, colour
    // for colour, so the generated colourings are equivalent and even share
    // their row space.  Keeping one matrix per conjugation orbit therefore
    // loses no classes, and it is the counting that matches a by-hand tally
    // of essentially different candidates.
    std::vector<gf2::SquareGF2> stab;
    {
        std::set<uint32_t> fixed_colours;
        for (int f = 0; f < m; ++f)
            if (seeded[f] != unset) fixed_colours.insert(seeded[f]);
        for (const gf2::SquareGF2& cand : gf2::enumerate_gl(k, true)) {
            bool fixes = true;
            for (uint32_t v : fixed_colours)
                if (cand.apply({v, k}).bits != v) {
                    fixes = false;
                    break;
                }
            if (fixes) stab.push_back(cand);
        }
    }
    {
        std::vector<gf2::SquareGF2> reps;
        std::set<gf2::SquareGF2> visited;
        for (const gf2::SquareGF2& a : mats) {
            if (visited.count(a)) continue;
            reps.push_back(a);
            for (const gf2::SquareGF2& s : stab) visited.insert(s * a * gf2::inverse(s));
        }
        mats = std::move(reps);
    }

    CanonicalContext ctx(p, k, GlMode::gl_or);
    std::set<std::string> keys;
    long long raw = 0;

    for (const gf2::SquareGF2& a : mats) {
        // propagate every seed around its orbit; drop A on any mismatch,
        // including failure of A^(orbit length) to fix the seed colour
        std::vector<uint32_t> col(m, unset);
        bool ok = true;
        for (int f = 0; f < m && ok; ++f) {
            if (seeded[f] == unset) continue;
            gf2::BitVec v{seeded[f], k};
            int g = f;
            do {
                if (col[g] != unset && col[g] != v.bits) {
                    ok = false;
                    break;
                }
                col[g] = v.bits;
                g = phi(g);
                v = a.apply(v);
            } while (g != f);
            if (ok && v.bits != seeded[f]) ok = false;
        }
        if (!ok) continue;

        // candidates for each unseeded orbit: odd colours surviving the
        // orbit's closure and its internal adjacencies; everything else is
        // left to the full filters below
        std::vector<const std::vector<int>*> free_orbits;
        std::vector<std::vector<uint32_t>> cands;
        for (const auto& orb : orbits) {
            bool has_seed = false;
            for (int f : orb) has_seed = has_seed || seeded[f] != unset;
            if (has_seed) continue;
            int len = static_cast<int>(orb.size());
            std::vector<uint32_t> list;
            std::vector<uint32_t> ring(len);
            for (uint32_t bits = 1; bits < (1u << k); ++bits) {
                gf2::BitVec v{bits, k};
                if (!v.odd_weight()) continue;
                gf2::BitVec w = v;
                for (int i = 0; i < len; ++i) {
                    ring[i] = w.bits;
                    w = a.apply(w);
                }
                if (!(w == v)) continue;
                bool proper = true;
                for (int i = 0; i < len && proper; ++i)
                    for (int j = i + 1; j < len && proper; ++j)
                        if (ring[i] == ring[j] && p.adjacent(orb[i], orb[j])) proper = false;
                if (proper) list.push_back(bits);
            }
            free_orbits.push_back(&orb);
            cands.push_back(std::move(list));
        }

        const long long combo_limit = 100'000'000;
        long long combos = 1;
        for (const auto& list : cands) {
            long long want = static_cast<long long>(list.size());
            if (want == 0) {
                combos = 0;
                break;
            }
            if (combos > combo_limit / want)
                throw std::invalid_argument(
                    "construct: too many free orbit choices; seed more facets");
            combos *= want;
        }
        raw += combos;
        if (combos == 0) continue;

        std::vector<size_t> pick(cands.size(), 0);
        std::vector<uint32_t> full(m);
        while (true) {
            full.assign(col.begin(), col.end());
            for (size_t i = 0; i < pick.size(); ++i) {
                gf2::BitVec w{cands[i][pick[i]], k};
                for (int f : *free_orbits[i]) {
                    full[f] = w.bits;
                    w = a.apply(w);
                }
            }

            bool proper = true;
            for (const auto& [x, y] : p.edges())
                if (full[x] == full[y]) {
                    proper = false;
                    break;
                }
            if (proper) {
                gf2::SpanBasis span;
                for (int f = 0; f < m; ++f) span.insert(full[f]);
                if (span.dim() == k) {
                    std::vector<gf2::BitVec> colours(m);
                    for (int f = 0; f < m; ++f) colours[f] = {full[f], k};
                    Colouring c(k, std::move(colours));
                    if (!qhs || is_qhs(p, c)) {
                        if (!induced_linear_map(p, c, phi))
                            throw std::logic_error("construct: symmetry lost in propagation");
                        keys.insert(ctx.form(c));
                    }
                }
            }

            size_t i = 0;
            while (i < pick.size() && ++pick[i] == cands[i].size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    }

    return {raw, classes_from_keys(p, keys)};
}

}  // namespace qhs
