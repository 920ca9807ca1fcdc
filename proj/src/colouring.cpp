#include "qhs/colouring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qhs {

using gf2::BitMatrix;
using gf2::BitVec;

Colouring::Colouring(int rank, std::vector<BitVec> assignment)
    : k(rank), colours(std::move(assignment))
{
    if (k < 1 || k > 32) throw std::invalid_argument("colouring rank must be in [1, 32]");
    if (colours.empty() || colours.size() > 32)
        throw std::invalid_argument("colouring needs between 1 and 32 facets");
    gf2::SpanBasis span;
    for (const auto& v : colours) {
        if (v.len != k) throw std::invalid_argument("colour length does not match rank");
        span.insert(v.bits);
    }
    if (span.dim() != k) throw std::invalid_argument("colours do not span the colour space");
}

BitMatrix Colouring::matrix() const
{
    int m = facet_count();
    BitMatrix rows(m);
    for (int i = 0; i < k; ++i) {
        uint32_t bits = 0;
        for (int f = 0; f < m; ++f)
            if (colours[f].get(i)) bits |= 1u << f;
        rows.append_row({bits, m});
    }
    return rows;
}

Colouring colouring_from_matrix(const BitMatrix& rows)
{
    int k = rows.row_count();
    if (k < 1) throw std::invalid_argument("defining matrix has no rows");
    std::vector<BitVec> colours;
    for (int f = 0; f < rows.cols; ++f) colours.push_back(rows.column(f));
    return Colouring(k, std::move(colours));
}

namespace {

void check_match(const Polytope& p, const Colouring& c)
{
    if (c.facet_count() != p.facet_count())
        throw std::invalid_argument("colouring does not match the polytope's facet count");
}

}  // namespace

bool is_proper(const Polytope& p, const Colouring& c)
{
    check_match(p, c);
    bool all_odd = true;
    for (const auto& v : c.colours) {
        if (v.is_zero()) return false;
        all_odd = all_odd && v.odd_weight();
    }
    for (auto [f, g] : p.edges())
        if (c.colours[f] == c.colours[g]) return false;
    if (all_odd) return true;  // distinct odd colours on a simplex are independent
    for (const auto& t : p.vertices()) {
        BitVec a = c.colours[t[0]], b = c.colours[t[1]], d = c.colours[t[2]];
        if ((a ^ b ^ d).is_zero()) return false;
    }
    return true;
}

bool is_proper_independence(const Polytope& p, const Colouring& c)
{
    check_match(p, c);
    for (const auto& v : c.colours)
        if (v.is_zero()) return false;
    for (auto [f, g] : p.edges()) {
        gf2::SpanBasis span;
        span.insert(c.colours[f].bits);
        if (!span.insert(c.colours[g].bits)) return false;
    }
    for (const auto& t : p.vertices()) {
        gf2::SpanBasis span;
        for (int f : t)
            if (!span.insert(c.colours[f].bits)) return false;
    }
    return true;
}

bool is_orientable(const Polytope& p, const Colouring& c)
{
    check_match(p, c);
    return gf2::in_span(gf2::ones(p.facet_count()), c.matrix());
}

Subcomplex subcomplex(const Polytope& p, BitVec omega)
{
    if (omega.len != p.facet_count())
        throw std::invalid_argument("subcomplex: omega length does not match facet count");
    Subcomplex s;
    s.omega = omega;
    std::vector<int> idx(p.facet_count(), -1);
    for (int f = 0; f < p.facet_count(); ++f)
        if (omega.get(f)) {
            idx[f] = static_cast<int>(s.facets.size());
            s.facets.push_back(f);
        }
    for (auto [f, g] : p.edges())
        if (idx[f] >= 0 && idx[g] >= 0) s.edges.push_back({idx[f], idx[g]});
    for (const auto& t : p.vertices())
        if (idx[t[0]] >= 0 && idx[t[1]] >= 0 && idx[t[2]] >= 0)
            s.triangles.push_back({idx[t[0]], idx[t[1]], idx[t[2]]});
    return s;
}

std::vector<Colouring> extensions(const Polytope& p, const Colouring& c)
{
    check_match(p, c);
    int m = p.facet_count();
    if (m > 16) throw std::invalid_argument("extensions: enumeration limited to m <= 16");
    if (c.k + 1 > 32) throw std::invalid_argument("extensions: rank would exceed 32");
    BitMatrix rows = c.matrix();
    std::vector<Colouring> out;
    for (uint32_t b = 0; b < (1u << m); ++b) {
        if (gf2::in_span({b, m}, rows)) continue;
        std::vector<BitVec> colours;
        colours.reserve(m);
        for (int f = 0; f < m; ++f)
            colours.push_back({c.colours[f].bits | (((b >> f) & 1u) << c.k), c.k + 1});
        out.emplace_back(c.k + 1, std::move(colours));
    }
    return out;
}

CanonicalContext::CanonicalContext(const Polytope& p, int k, GlMode mode)
    : k_(k), m_(p.facet_count()), mode_(mode)
{
    if (k < 1 || k > 5)
        throw std::invalid_argument("canonical form supports ranks 1 to 5 only");
    if (m_ > 32)
        throw std::invalid_argument("canonical form supports at most 32 facets");
    for (const auto& a : automorphisms(p)) sym_.push_back(a.image);
}

std::string CanonicalContext::form(const Colouring& c) const
{
    if (c.k != k_) throw std::invalid_argument("canonical form: rank mismatch");
    if (c.facet_count() != m_)
        throw std::invalid_argument("canonical form: facet count mismatch");

    // Rows of Lambda as m bit facet words, facet f in bit f.  The rows are
    // independent, the Colouring constructor enforces that.
    std::array<uint32_t, 5> rows{};
    for (int i = 0; i < k_; ++i)
        for (int f = 0; f < m_; ++f)
            if (c.colours[f].get(i)) rows[i] |= 1u << f;

    const uint32_t count = 1u << k_;
    std::vector<uint32_t> space(count);
    std::vector<uint32_t> elems(count - 1);
    std::array<uint32_t, 5> best{};
    best.fill(~uint32_t(0));

    for (const auto& s : sym_) {
        // Permuted rows reversed so that facet position 0 sits in the top
        // bit: integer order on these words is string order on printed rows.
        std::array<uint32_t, 5> permuted{};
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < m_; ++j)
                if ((rows[i] >> s[j]) & 1u) permuted[i] |= 1u << (m_ - 1 - j);
        space[0] = 0;
        for (uint32_t w = 1; w < count; ++w)
            space[w] = space[w & (w - 1)] ^ permuted[std::countr_zero(w)];
        for (uint32_t w = 1; w < count; ++w) elems[w - 1] = space[w];
        std::sort(elems.begin(), elems.end());

        // The rows of M * Lambda over admissible M are exactly the ordered
        // bases of the row space, in orientation preserving mode those
        // summing to the sum of all rows of Lambda.  Pick each row greedily
        // smallest; a partial choice with span U and outstanding sum t
        // completes iff t lies outside U, or t = 0 when no slot is left.
        std::array<uint32_t, 5> chosen{};
        gf2::SpanBasis span;
        uint32_t t = space[count - 1];
        for (int slot = 0; slot < k_; ++slot) {
            bool found = false;
            for (uint32_t word : elems) {
                if (span.contains(word)) continue;
                if (mode_ == GlMode::gl_or) {
                    if (slot == k_ - 1) {
                        if (word != t) continue;
                    } else {
                        // t ^ word lies in span + word iff its reduction
                        // vanishes or equals the reduction of word.
                        uint32_t rt = span.reduce(t ^ word);
                        if (rt == 0 || rt == span.reduce(word)) continue;
                    }
                }
                span.insert(word);
                t ^= word;
                chosen[slot] = word;
                found = true;
                break;
            }
            if (!found)
                throw std::logic_error("canonical form: greedy basis construction failed");
        }
        if (chosen < best) best = chosen;
    }

    std::string out;
    out.reserve(static_cast<size_t>(k_) * (m_ + 1));
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < m_; ++j)
            out.push_back((best[i] >> (m_ - 1 - j)) & 1u ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string canonical_form(const Polytope& p, const Colouring& c, GlMode mode)
{
    return CanonicalContext(p, c.k, mode).form(c);
}

bool equivalent(const Polytope& p, const Colouring& a, const Colouring& b, GlMode mode)
{
    if (a.k != b.k || a.facet_count() != b.facet_count()) return false;
    CanonicalContext ctx(p, a.k, mode);
    return ctx.form(a) == ctx.form(b);
}

}  // namespace qhs
