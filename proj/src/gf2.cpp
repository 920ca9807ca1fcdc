#include "qhs/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qhs::gf2 {

namespace {

void check_len(int len)
{
    if (len < 1 || len > 32) throw std::invalid_argument("vector length must be in [1, 32]");
}

uint32_t mask_of(int len)
{
    return len == 32 ? 0xffffffffu : (1u << len) - 1u;
}

}  // namespace

BitVec basis_vec(int i, int len)
{
    check_len(len);
    if (i < 0 || i >= len) throw std::invalid_argument("basis index out of range");
    return {1u << i, len};
}

BitVec ones(int len)
{
    check_len(len);
    return {mask_of(len), len};
}

bool dot(BitVec a, BitVec b)
{
    if (a.len != b.len) throw std::invalid_argument("dot: length mismatch");
    return __builtin_popcount(a.bits & b.bits) % 2 == 1;
}

BitVec parse_bits(std::string_view s)
{
    check_len(static_cast<int>(s.size()));
    uint32_t bits = 0;
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            bits |= 1u << j;
        else if (s[j] != '0')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    return {bits, static_cast<int>(s.size())};
}

std::string to_string(BitVec v)
{
    std::string s(v.len, '0');
    for (int j = 0; j < v.len; ++j)
        if (v.get(j)) s[j] = '1';
    return s;
}

void BitMatrix::append_row(BitVec r)
{
    if (r.len != cols) throw std::invalid_argument("row length does not match column count");
    rows.push_back(r);
}

BitVec BitMatrix::column(int j) const
{
    if (j < 0 || j >= cols) throw std::invalid_argument("column index out of range");
    uint32_t bits = 0;
    for (int i = 0; i < row_count(); ++i)
        if (rows[i].get(j)) bits |= 1u << i;
    return {bits, row_count()};
}

uint32_t SpanBasis::reduce(uint32_t v) const
{
    for (uint32_t b : rows) {
        uint32_t pivot = b & -b;
        if (v & pivot) v ^= b;
    }
    return v;
}

bool SpanBasis::insert(uint32_t v)
{
    v = reduce(v);
    if (v == 0) return false;
    // Keep rows ordered by pivot so reduction stays canonical.
    uint32_t pivot = v & -v;
    auto it = rows.begin();
    while (it != rows.end() && (*it & -*it) < pivot) ++it;
    rows.insert(it, v);
    return true;
}

int rank(const BitMatrix& m)
{
    SpanBasis basis;
    for (const BitVec& r : m.rows) basis.insert(r.bits);
    return basis.dim();
}

std::vector<BitVec> row_space(const BitMatrix& m)
{
    if (m.row_count() > 25) throw std::invalid_argument("row_space: too many rows to expand");
    SpanBasis basis;
    for (const BitVec& r : m.rows) basis.insert(r.bits);
    std::vector<BitVec> space;
    space.reserve(size_t{1} << basis.dim());
    space.push_back({0, m.cols});
    for (uint32_t b : basis.rows) {
        size_t half = space.size();
        for (size_t i = 0; i < half; ++i) space.push_back({space[i].bits ^ b, m.cols});
    }
    std::sort(space.begin(), space.end());
    return space;
}

bool in_span(BitVec v, const BitMatrix& m)
{
    if (v.len != m.cols) throw std::invalid_argument("in_span: length mismatch");
    SpanBasis basis;
    for (const BitVec& r : m.rows) basis.insert(r.bits);
    return basis.contains(v.bits);
}

std::vector<BitVec> orientable_vectors(int k)
{
    check_len(k);
    std::vector<BitVec> out;
    for (uint32_t v = 1; v <= mask_of(k) && k > 0; ++v)
        if (__builtin_popcount(v) % 2 == 1) out.push_back({v, k});
    return out;
}

BitMatrix parse_matrix(const std::string& text)
{
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty()) throw std::invalid_argument("matrix text is empty");
    BitMatrix m(static_cast<int>(lines[0].size()));
    for (const std::string& line : lines) {
        if (line.empty()) throw std::invalid_argument("matrix text contains a blank line");
        if (static_cast<int>(line.size()) != m.cols)
            throw std::invalid_argument("matrix rows have unequal length");
        m.append_row(parse_bits(line));
    }
    return m;
}

std::string format_matrix(const BitMatrix& m)
{
    std::string out;
    for (int i = 0; i < m.row_count(); ++i) {
        out += to_string(m.rows[i]);
        out.push_back('\n');
    }
    return out;
}

SquareGF2 SquareGF2::identity(int k)
{
    SquareGF2 a(k);
    for (int j = 0; j < k; ++j) a.cols[j] = basis_vec(j, k);
    return a;
}

BitVec SquareGF2::apply(BitVec v) const
{
    if (v.len != n) throw std::invalid_argument("apply: length mismatch");
    uint32_t out = 0;
    uint32_t rest = v.bits;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        out ^= cols[j].bits;
    }
    return {out, n};
}

bool SquareGF2::is_identity() const
{
    for (int j = 0; j < n; ++j)
        if (cols[j].bits != (1u << j)) return false;
    return true;
}

SquareGF2 operator*(const SquareGF2& a, const SquareGF2& b)
{
    if (a.n != b.n) throw std::invalid_argument("matrix product: size mismatch");
    SquareGF2 c(a.n);
    for (int j = 0; j < a.n; ++j) c.cols[j] = a.apply(b.cols[j]);
    return c;
}

bool invertible(const SquareGF2& a)
{
    SpanBasis basis;
    int r = 0;
    for (const BitVec& c : a.cols) r += basis.insert(c.bits) ? 1 : 0;
    return r == a.n;
}

bool orientation_preserving(const SquareGF2& a)
{
    for (const BitVec& c : a.cols)
        if (!c.odd_weight()) return false;
    return true;
}

SquareGF2 inverse(const SquareGF2& a)
{
    // Row elimination on [A | I] using row-major words.
    BitMatrix rowsA = to_row_matrix(a);
    int n = a.n;
    std::vector<uint64_t> aug(n);
    for (int i = 0; i < n; ++i)
        aug[i] = uint64_t{rowsA.rows[i].bits} | (uint64_t{1} << (32 + i));
    int r = 0;
    for (int j = 0; j < n && r < n; ++j) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if ((aug[i] >> j) & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(aug[r], aug[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != r && ((aug[i] >> j) & 1)) aug[i] ^= aug[r];
        ++r;
    }
    if (r < n) throw std::runtime_error("inverse: matrix is singular");
    BitMatrix inv_rows(n);
    for (int i = 0; i < n; ++i)
        inv_rows.append_row({static_cast<uint32_t>(aug[i] >> 32), n});
    return from_row_matrix(inv_rows);
}

int matrix_order(const SquareGF2& a)
{
    if (!invertible(a)) throw std::invalid_argument("matrix_order: matrix is singular");
    SquareGF2 p = a;
    int order = 1;
    // Orders in GL_k(Z2) for k <= 32 are far below this bound; it only guards
    // against a broken multiply.
    while (!p.is_identity()) {
        p = p * a;
        if (++order > (1 << 25)) throw std::logic_error("matrix_order: runaway loop");
    }
    return order;
}

BitMatrix to_row_matrix(const SquareGF2& a)
{
    BitMatrix m(a.n);
    for (int i = 0; i < a.n; ++i) {
        uint32_t bits = 0;
        for (int j = 0; j < a.n; ++j)
            if (a.cols[j].get(i)) bits |= 1u << j;
        m.append_row({bits, a.n});
    }
    return m;
}

SquareGF2 from_row_matrix(const BitMatrix& m)
{
    if (m.cols != m.row_count()) throw std::invalid_argument("from_row_matrix: not square");
    SquareGF2 a(m.cols);
    for (int j = 0; j < m.cols; ++j) a.cols[j] = m.column(j);
    return a;
}

namespace {

void enumerate_gl_rec(int k, bool orientable_only, SquareGF2& partial, int depth,
                      uint64_t span_mask, std::vector<SquareGF2>& out)
{
    if (depth == k) {
        out.push_back(partial);
        return;
    }
    uint32_t limit = mask_of(k);
    for (uint32_t v = 1; v <= limit; ++v) {
        if (orientable_only && __builtin_popcount(v) % 2 == 0) continue;
        if ((span_mask >> v) & 1) continue;
        // Extend the span mask by the coset v + current span.
        uint64_t grown = span_mask;
        for (int s = 0; s <= static_cast<int>(limit); ++s)
            if ((span_mask >> s) & 1) grown |= uint64_t{1} << (s ^ v);
        partial.cols[depth] = {v, k};
        enumerate_gl_rec(k, orientable_only, partial, depth + 1, grown, out);
    }
}

}  // namespace

std::vector<SquareGF2> enumerate_gl(int k, bool orientable_only)
{
    if (k < 1 || k > 5)
        throw std::invalid_argument("enumerate_gl: k must be in [1, 5]");
    std::vector<SquareGF2> out;
    SquareGF2 partial(k);
    enumerate_gl_rec(k, orientable_only, partial, 0, 1 /* span of {} = {0} */, out);
    return out;
}

std::vector<SquareGF2> matrices_with_constraints(
    int k, int order, const std::vector<std::pair<BitVec, BitVec>>& constraints)
{
    if (order < 1) throw std::invalid_argument("matrices_with_constraints: order must be >= 1");
    // Constraints must be consistent as a partial linear map: whenever the
    // sources satisfy a linear relation, the images must satisfy it too.
    std::vector<std::pair<uint32_t, uint32_t>> echelon;
    for (const auto& [v, w] : constraints) {
        if (v.len != k || w.len != k)
            throw std::invalid_argument("matrices_with_constraints: constraint length mismatch");
        uint32_t r = v.bits, s = w.bits;
        for (const auto& [b, im] : echelon) {
            uint32_t pivot = b & -b;
            if (r & pivot) {
                r ^= b;
                s ^= im;
            }
        }
        if (r == 0) {
            if (s != 0)
                throw std::invalid_argument("matrices_with_constraints: inconsistent constraints");
            continue;
        }
        echelon.emplace_back(r, s);
    }
    std::vector<SquareGF2> out;
    for (const SquareGF2& a : enumerate_gl(k, true)) {
        bool ok = true;
        for (const auto& [v, w] : constraints)
            if (a.apply(v) != w) {
                ok = false;
                break;
            }
        if (!ok) continue;
        SquareGF2 p = a;
        for (int i = 1; i < order; ++i) p = p * a;
        if (p.is_identity()) out.push_back(a);
    }
    return out;
}

}  // namespace qhs::gf2
