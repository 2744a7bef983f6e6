#pragma once

#include <random>
#include <set>
#include <vector>

#include "z4forge/bincode.hpp"
#include "z4forge/gf2.hpp"
#include "z4forge/z4code.hpp"

namespace testutil {

using namespace z4forge;

inline BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1u) v.set(i, true);
    return v;
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng() & 1u) m.set(i, j, true);
    return m;
}

// Independent oracle: materialize the whole row span by enumerating all 2^rows
// combinations from scratch.
inline std::set<std::vector<std::uint64_t>> span_set(const BitMatrix& m) {
    std::set<std::vector<std::uint64_t>> out;
    const std::uint64_t total = std::uint64_t(1) << m.rows();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVector v(m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            if ((mask >> i) & 1u) v ^= m.row(i);
        out.insert(v.words());
    }
    return out;
}

// Independent oracle: weight counts by rebuilding every codeword from its
// coefficient mask (no Gray stepping, no shared state).
inline WeightDistribution naive_distribution(const BinaryCode& c) {
    WeightDistribution wd(c.length());
    const std::uint64_t total = std::uint64_t(1) << c.dim();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVector v(c.length());
        for (std::size_t i = 0; i < c.dim(); ++i)
            if ((mask >> i) & 1u) v ^= c.basis().row(i);
        ++wd.counts[v.weight()];
    }
    return wd;
}

// Independent oracle: the full set of Z4 codewords generated from arbitrary
// generator rows by trying all coefficient tuples (values 0..3 per row) and
// deduplicating.
inline std::set<std::string> naive_z4_span(const std::vector<Z4Vector>& gens, std::size_t n) {
    std::set<std::string> words;
    std::vector<unsigned> digits(gens.size(), 0);
    for (;;) {
        Z4Vector v(n);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (digits[i]) v += gens[i].times(digits[i]);
        words.insert(v.to_string());
        std::size_t j = 0;
        while (j < digits.size() && digits[j] == 3) digits[j++] = 0;
        if (j == digits.size()) break;
        ++digits[j];
    }
    return words;
}

// Random doubly even code with the all-ones vector, built by rejection: keep
// adjoining weight-divisible-by-4 vectors from the current dual.
inline BinaryCode random_admissible_residue(std::mt19937_64& rng, std::size_t n, std::size_t want_dim) {
    BitMatrix rows(0, n);
    rows.append_row(BitVector::all_ones(n));
    BinaryCode c = BinaryCode::from_rows(rows);
    std::size_t attempts = 0;
    while (c.dim() < want_dim && attempts < 4000) {
        ++attempts;
        BinaryCode d = dual(c);
        BitVector cand(n);
        for (std::size_t i = 0; i < d.dim(); ++i)
            if (rng() & 1u) cand ^= d.basis().row(i);
        if (cand.weight() % 4 != 0 || cand.is_zero() || c.contains(cand)) continue;
        c = extend(c, cand);
    }
    return c;
}

}  // namespace testutil
