#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z4forge {

// Packed vector over GF(2), 64 coordinates per word. Bits beyond size() are
// kept zero so weights and comparisons never see garbage.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    // "0110..." — spaces are skipped; anything else is rejected.
    static BitVector from_string(const std::string& bits);
    // 0-based coordinate list.
    static BitVector from_support(std::size_t n, const std::vector<std::size_t>& support);
    static BitVector all_ones(std::size_t n);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v) {
        if (v)
            w_[i / 64] |= std::uint64_t(1) << (i % 64);
        else
            w_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }
    void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t(1) << (i % 64); }

    std::size_t weight() const;
    bool is_zero() const;
    // <x,y> over GF(2); sizes must match.
    bool dot(const BitVector& o) const;
    // Number of coordinates where both are 1 (exact integer, not mod 2).
    std::size_t and_weight(const BitVector& o) const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    BitVector& operator&=(const BitVector& o);
    friend BitVector operator&(BitVector a, const BitVector& b) {
        a &= b;
        return a;
    }

    // Index of the first set bit, if any.
    std::optional<std::size_t> leading_bit() const;

    std::vector<std::size_t> support() const;
    std::string to_string() const;

    bool operator==(const BitVector&) const = default;
    // Deterministic total order (word-lexicographic); used for canonical keys.
    bool operator<(const BitVector& o) const { return w_ < o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major packed matrix over GF(2). Matrices with zero rows are legal
// everywhere and represent the zero code's generator.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return r_[i]; }
    BitVector& row(std::size_t i) { return r_[i]; }
    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }

    void append_row(BitVector v);
    const std::vector<BitVector>& row_list() const { return r_; }

    bool operator==(const BitMatrix&) const = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> r_;
};

struct RrefResult {
    BitMatrix matrix;                 // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Reduced row echelon form with leftmost-pivot selection and no column
// permutation. Row space is preserved; zero rows are dropped.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Coefficient vector x (length m.rows()) with x * M = b, or nullopt when b is
// not in the row space of M.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Basis of { x : M x^T = 0 }, returned in rref; rows() = cols - rank.
BitMatrix nullspace_basis(const BitMatrix& m);

// x * M (x has m.rows() coordinates).
BitVector mul_left(const BitVector& x, const BitMatrix& m);

}  // namespace z4forge
