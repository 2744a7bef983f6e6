#include "z4forge/gf2.hpp"

#include <algorithm>
#include <bit>

#include "z4forge/errors.hpp"

namespace z4forge {

BitVector BitVector::from_string(const std::string& bits) {
    std::string clean;
    clean.reserve(bits.size());
    for (char c : bits) {
        if (c == ' ' || c == '\t') continue;
        if (c != '0' && c != '1') throw input_error("bad bit character in vector literal");
        clean.push_back(c);
    }
    BitVector v(clean.size());
    for (std::size_t i = 0; i < clean.size(); ++i)
        if (clean[i] == '1') v.set(i, true);
    return v;
}

BitVector BitVector::from_support(std::size_t n, const std::vector<std::size_t>& support) {
    BitVector v(n);
    for (std::size_t i : support) {
        if (i >= n) throw input_error("support coordinate out of range");
        v.set(i, true);
    }
    return v;
}

BitVector BitVector::all_ones(std::size_t n) {
    BitVector v(n);
    for (std::size_t w = 0; w < v.w_.size(); ++w) v.w_[w] = ~std::uint64_t(0);
    if (n % 64) v.w_.back() &= (std::uint64_t(1) << (n % 64)) - 1;
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t s = 0;
    for (std::uint64_t w : w_) s += std::popcount(w);
    return s;
}

bool BitVector::is_zero() const {
    for (std::uint64_t w : w_)
        if (w) return false;
    return true;
}

bool BitVector::dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1u;
}

std::size_t BitVector::and_weight(const BitVector& o) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += std::popcount(w_[i] & o.w_[i]);
    return s;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

std::optional<std::size_t> BitVector::leading_bit() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return std::nullopt;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t w = w_[i];
        while (w) {
            s.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return s;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows)
        if (r.size() != cols) throw input_error("row length mismatch");
    BitMatrix m;
    m.cols_ = cols;
    m.r_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> r;
    r.reserve(rows.size());
    for (const auto& s : rows) r.push_back(BitVector::from_string(s));
    std::size_t cols = r.empty() ? 0 : r[0].size();
    return from_rows(std::move(r), cols);
}

void BitMatrix::append_row(BitVector v) {
    if (r_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw input_error("row length mismatch");
    r_.push_back(std::move(v));
}

RrefResult rref(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_list();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {BitMatrix::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.cols()) throw input_error("solve: target length mismatch");
    // Row-reduce while tracking the row operations in a companion identity so
    // the answer is expressed over the original rows.
    std::vector<BitVector> rows = m.row_list();
    std::vector<BitVector> ops;
    ops.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BitVector e(m.rows());
        e.set(i, true);
        ops.push_back(std::move(e));
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::swap(ops[r], ops[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                ops[i] ^= ops[r];
            }
        pivots.push_back(c);
        ++r;
    }
    BitVector rem = b;
    BitVector coeff(m.rows());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (rem.get(pivots[i])) {
            rem ^= rows[i];
            coeff ^= ops[i];
        }
    if (!rem.is_zero()) return std::nullopt;
    return coeff;
}

BitMatrix nullspace_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    basis.reserve(n - rr.pivots.size());
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector x(n);
        x.set(f, true);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            if (rr.matrix.get(i, f)) x.set(rr.pivots[i], true);
        basis.push_back(std::move(x));
    }
    // Free-column vectors come out in echelon shape already; rref once more to
    // present them canonically.
    return rref(BitMatrix::from_rows(std::move(basis), n)).matrix;
}

BitVector mul_left(const BitVector& x, const BitMatrix& m) {
    if (x.size() != m.rows()) throw input_error("mul_left: coefficient length mismatch");
    BitVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (x.get(i)) out ^= m.row(i);
    return out;
}

}  // namespace z4forge
