#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "z4forge/bincode.hpp"
#include "z4forge/gf2.hpp"

namespace z4forge {

// Vector over the integers mod 4, stored as two bit planes: entry value is
// lo + 2*hi. Plane storage makes mod-4 arithmetic and the weight counts
// (n1, n2, n3) plain word operations.
class Z4Vector {
  public:
    Z4Vector() = default;
    explicit Z4Vector(std::size_t n) : n_(n), lo_((n + 63) / 64, 0), hi_((n + 63) / 64, 0) {}

    // "1302..." — spaces skipped, anything else rejected.
    static Z4Vector from_string(const std::string& s);
    static Z4Vector from_planes(BitVector lo, BitVector hi);

    std::size_t size() const { return n_; }

    unsigned get(std::size_t i) const {
        return unsigned((lo_[i / 64] >> (i % 64)) & 1u) | (unsigned((hi_[i / 64] >> (i % 64)) & 1u) << 1);
    }
    void set(std::size_t i, unsigned v);

    Z4Vector& operator+=(const Z4Vector& o);
    friend Z4Vector operator+(Z4Vector a, const Z4Vector& b) {
        a += b;
        return a;
    }
    Z4Vector negated() const;
    Z4Vector doubled() const;
    Z4Vector times(unsigned c) const;  // c in {0,1,2,3}

    // n_a counts coordinates equal to a.
    std::size_t n1() const;
    std::size_t n2() const;
    std::size_t n3() const;
    std::size_t euclidean_weight() const { return n1() + 4 * n2() + n3(); }
    std::size_t lee_weight() const { return n1() + 2 * n2() + n3(); }
    std::size_t hamming_weight() const;

    bool is_zero() const;

    BitVector mod2() const;      // reduction mod 2
    BitVector two_mask() const;  // coordinates equal to 2
    // Inner product mod 4.
    unsigned dot4(const Z4Vector& o) const;

    std::string to_string() const;
    bool operator==(const Z4Vector&) const = default;
    bool operator<(const Z4Vector& o) const;

    const std::vector<std::uint64_t>& lo_words() const { return lo_; }
    const std::vector<std::uint64_t>& hi_words() const { return hi_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> lo_, hi_;
};

// Z4-submodule of Z4^n held in a canonical standard-form presentation:
// k1 order-4 generators (canonical lifts of the residue rref basis) followed
// by k2 order-2 generators (doubled torsion complement rows). Two
// presentations of the same submodule produce identical objects. The column
// permutation that would realize the literal (I_k A; O 2B) block shape is
// recorded; the generators themselves stay in original coordinates.
class Z4Code {
  public:
    Z4Code() = default;

    // Canonicalize any spanning set.
    static Z4Code standard_form(const std::vector<Z4Vector>& gens, std::size_t n);

    std::size_t length() const { return n_; }
    std::size_t k1() const { return k1_; }
    std::size_t k2() const { return k2_; }
    // log2 |C| = 2*k1 + k2.
    std::size_t log2_size() const { return 2 * k1_ + k2_; }

    const std::vector<Z4Vector>& generators() const { return gens_; }
    const BinaryCode& residue() const { return residue_; }
    const BinaryCode& torsion() const { return torsion_; }
    const std::vector<std::size_t>& column_permutation() const { return perm_; }

    // The canonical codeword over residue class r (r must lie in the residue
    // code); any lift works for coset arguments since cosets of 2*torsion are
    // scanned in full.
    Z4Vector lift(const BitVector& r) const;

    bool contains(const Z4Vector& v) const;

    bool operator==(const Z4Code&) const = default;
    std::string canonical_key() const;

  private:
    std::size_t n_ = 0;
    std::size_t k1_ = 0, k2_ = 0;
    std::vector<Z4Vector> gens_;
    BinaryCode residue_, torsion_;
    std::vector<std::size_t> perm_;
};

BinaryCode residue(const Z4Code& c);
BinaryCode torsion(const Z4Code& c);

// Append order-2 rows 2d, d running over a basis of dual(residue) modulo the
// residue, to an order-4 upper part. For upper parts of the (I_k A) shape —
// or any rows with independent residues — this recovers the full code of size
// 2^n determined by self-duality.
Z4Code complete_self_dual(const std::vector<Z4Vector>& upper, std::size_t n);

// Self-dual <=> |C| = 2^n and all generator pairs have inner product 0 mod 4.
bool is_self_dual(const Z4Code& c);
// Type II <=> self-dual and every generator has Euclidean weight 0 mod 8
// (sufficient: EW(x+y) = EW(x) + EW(y) + 2(x.y) mod 8 and x.y = 0 mod 4).
bool is_type_ii(const Z4Code& c);

// Visits every codeword exactly once via a mixed-radix reflected Gray counter
// over the standard-form generators (one row add/subtract per step). Guarded
// at |C| <= 2^28.
void enumerate_codewords(const Z4Code& c, const std::function<void(const Z4Vector&)>& visit);
std::vector<Z4Vector> enumerate_codewords(const Z4Code& c);

// True iff some torsion word, restricted to the complement of S, lies within
// Hamming distance <= radius (radius <= 3) of the target. Decided by a
// syndrome test against a parity-check basis of the punctured torsion code,
// i.e. the S-shortened dual of the torsion code.
bool coset_distance_le(const BinaryCode& torsion_code, const std::vector<std::size_t>& excluded,
                       const BitVector& target, unsigned radius);

struct ExtremalityReport {
    bool type_ii = false;
    std::optional<std::size_t> d_E, d_L, d_H;
    bool extremal = false;
    std::optional<Z4Vector> witness;  // attains d_E
    enum class Method { decomposition, bruteforce } method = Method::decomposition;
};

// Certified minimum weights without full enumeration. Codewords are split by
// residue class: over class c0 of weight w every codeword is lift(c0) + 2t,
// and its Euclidean weight is w + 4*dist(t off supp(c0), two-pattern of the
// lift). Euclidean weight 8 therefore needs (w, n2) in {(0,2),(4,1),(8,0)};
// the first case is read off the torsion distribution, the others are
// radius-1/0 syndrome queries over weight-4/8 residue words. Lee minima are
// resolved the same way up to 12 and fall back to enumeration (under the
// guard) beyond. Hamming minimum is the torsion minimum weight.
ExtremalityReport extremality(const Z4Code& c);

// Exact number of codewords of the given Euclidean weight (0, 8 or 16),
// counted per residue weight class by exact-distance syndrome counts and the
// torsion distribution.
std::uint64_t count_words_euclidean(const Z4Code& c, std::size_t target);

// First codeword of the exact Euclidean weight, if any (target 8 or 16).
std::optional<Z4Vector> find_word_of_euclidean_weight(const Z4Code& c, std::size_t target);

// Invariant tuple: equal fingerprints are necessary for monomial equivalence,
// never sufficient. Weight data ignores sign changes by construction.
struct Fingerprint {
    std::size_t n = 0, k1 = 0, k2 = 0;
    std::vector<std::uint64_t> residue_counts;
    std::vector<std::uint64_t> torsion_counts;
    std::uint64_t ew16 = 0;

    bool operator==(const Fingerprint&) const = default;
    bool operator<(const Fingerprint& o) const;
    std::string to_string() const;
};
Fingerprint fingerprint(const Z4Code& c);

// .z4m text format: '#' comment lines, one row per line over {0,1,2,3},
// internal spaces ignored. A file holds generator rows only; the standard
// form is recomputed on load.
std::vector<Z4Vector> parse_z4_rows(std::istream& in);
Z4Code read_z4m(std::istream& in);
void write_z4m(std::ostream& out, const Z4Code& c, const std::string& comment = "");

namespace detail {

// Parity checks for membership in the S-punctured torsion code: the rows of
// dual(torsion) that vanish on S (the S-shortened dual), kept at full length
// with zeros on S. Syndromes fit in 32 bits for every code in scope.
class SyndromeEngine {
  public:
    SyndromeEngine(const BitMatrix& torsion_dual_basis, const BitVector& s_mask);

    std::uint32_t syndrome(const BitVector& v) const;
    // Is syn a XOR of <= radius off-S columns?
    bool within(std::uint32_t syn, unsigned radius) const;
    // Number of exactly-r subsets of off-S columns with XOR equal to syn.
    std::uint64_t count_at(std::uint32_t syn, unsigned radius) const;
    // dim { t in torsion : supp(t) inside S } = |S| - rank of the dual basis
    // restricted to S (valid when the dual basis generates dual(torsion)).
    std::size_t s_dim() const { return s_dim_; }
    std::size_t check_count() const { return checks_.size(); }

  private:
    std::vector<BitVector> checks_;        // zero on S
    std::vector<std::uint32_t> columns_;   // syndromes of off-S unit vectors
    std::vector<std::size_t> off_s_;       // positions outside S
    std::size_t s_dim_ = 0;
};

}  // namespace detail

}  // namespace z4forge
