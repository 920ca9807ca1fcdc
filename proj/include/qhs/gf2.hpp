#pragma once
// Dense linear algebra over GF(2) with word-packed vectors.
//
// A BitVec holds a vector of GF(2)^len with len <= 32; coordinate i lives in
// bit i of a single word, so vector addition is XOR and dot products are
// popcount parities.  A BitMatrix stores its rows as BitVecs, which makes row
// reduction a sequence of word XORs.  SquareGF2 stores a k x k matrix by
// columns (cols[j] = image of the j-th standard basis vector), so applying the
// matrix to a vector is an XOR over the support.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qhs::gf2 {

struct BitVec {
    uint32_t bits = 0;
    int len = 0;

    constexpr BitVec() = default;
    constexpr BitVec(uint32_t b, int l) : bits(b), len(l) {}

    bool get(int i) const { return (bits >> i) & 1u; }
    int weight() const { return __builtin_popcount(bits); }
    bool odd_weight() const { return weight() % 2 == 1; }
    bool is_zero() const { return bits == 0; }

    friend BitVec operator^(BitVec a, BitVec b) { return {a.bits ^ b.bits, a.len}; }
    friend bool operator==(BitVec a, BitVec b) { return a.bits == b.bits && a.len == b.len; }
    friend bool operator<(BitVec a, BitVec b)
    {
        return a.len != b.len ? a.len < b.len : a.bits < b.bits;
    }
};

// e_{i+1} in GF(2)^len (bit i set).
BitVec basis_vec(int i, int len);
// The all-ones vector, written epsilon in the colouring context.
BitVec ones(int len);
// Parity of <a, b>.
bool dot(BitVec a, BitVec b);

// Text form: character j of the string is coordinate j+1, e.g. "0100" = e2.
BitVec parse_bits(std::string_view s);
std::string to_string(BitVec v);

struct BitMatrix {
    int cols = 0;
    std::vector<BitVec> rows;  // every row has len == cols

    BitMatrix() = default;
    explicit BitMatrix(int m) : cols(m) {}

    int row_count() const { return static_cast<int>(rows.size()); }
    void append_row(BitVec r);
    // Column j as a vector of length row_count().
    BitVec column(int j) const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b)
    {
        return a.cols == b.cols && a.rows == b.rows;
    }
};

// Incremental echelon basis; pivots are lowest set bits, inserted greedily.
// Gives deterministic reduction independent of insertion bookkeeping.
struct SpanBasis {
    std::vector<uint32_t> rows;  // pairwise distinct lowest set bits

    uint32_t reduce(uint32_t v) const;
    bool contains(uint32_t v) const { return reduce(v) == 0; }
    // Adds v if independent of the current span; returns true if it grew.
    bool insert(uint32_t v);
    int dim() const { return static_cast<int>(rows.size()); }
};

int rank(const BitMatrix& m);
// All 2^rank row-space elements, sorted.  Requires row_count <= 25.
std::vector<BitVec> row_space(const BitMatrix& m);
// Membership of v in the row space; throws on length mismatch.
bool in_span(BitVec v, const BitMatrix& m);
// Odd-weight vectors of GF(2)^k, sorted.
std::vector<BitVec> orientable_vectors(int k);

// Matrix text format: one line per row, characters '0'/'1', column j of line i
// is entry (i, j).  Rows separated by newlines; blank lines rejected.
BitMatrix parse_matrix(const std::string& text);
std::string format_matrix(const BitMatrix& m);

struct SquareGF2 {
    int n = 0;
    std::vector<BitVec> cols;  // cols[j] = image of e_{j+1}

    SquareGF2() = default;
    explicit SquareGF2(int k) : n(k), cols(k, BitVec(0, k)) {}
    SquareGF2(int k, std::vector<BitVec> c) : n(k), cols(std::move(c)) {}

    static SquareGF2 identity(int k);
    BitVec apply(BitVec v) const;
    bool is_identity() const;

    // Composition: (a * b)(v) = a(b(v)).
    friend SquareGF2 operator*(const SquareGF2& a, const SquareGF2& b);
    friend bool operator==(const SquareGF2& a, const SquareGF2& b)
    {
        return a.n == b.n && a.cols == b.cols;
    }
    friend bool operator<(const SquareGF2& a, const SquareGF2& b)
    {
        return a.n != b.n ? a.n < b.n : a.cols < b.cols;
    }
};

bool invertible(const SquareGF2& a);
// Every column has odd weight, i.e. the map preserves odd-weight vectors.
bool orientation_preserving(const SquareGF2& a);
SquareGF2 inverse(const SquareGF2& a);  // throws std::runtime_error if singular
int matrix_order(const SquareGF2& a);   // throws if singular

// Row-major view (row i, bit j = entry ij), the shape used for printing.
BitMatrix to_row_matrix(const SquareGF2& a);
SquareGF2 from_row_matrix(const BitMatrix& m);  // must be square

// All invertible k x k matrices, or only the orientation-preserving ones.
// Guarded at k <= 5: |GL_5| is just under 10^7 and is the intended ceiling.
std::vector<SquareGF2> enumerate_gl(int k, bool orientable_only);

// Orientation-preserving A with A^order = id and A(v) = w for each constraint
// pair (v, w).  Throws std::invalid_argument on linearly inconsistent
// constraints.  Same k <= 5 guard as enumerate_gl.
std::vector<SquareGF2> matrices_with_constraints(
    int k, int order, const std::vector<std::pair<BitVec, BitVec>>& constraints);

}  // namespace qhs::gf2
