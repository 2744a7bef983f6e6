#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "z4forge/gf2.hpp"

namespace z4forge {

// Exhaustive enumeration is capped at 2^28 codewords; larger codes must route
// through the dual side.
inline constexpr std::size_t kEnumGuardDim = 28;

// Exact weight distribution A_0..A_n of an [n,k] binary code. Counts stay
// below 2^33 for everything at n <= 40, so 64-bit is enough.
struct WeightDistribution {
    std::size_t n = 0;
    std::vector<std::uint64_t> counts;  // size n + 1

    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t len) : n(len), counts(len + 1, 0) {}

    std::uint64_t total() const;
    // Smallest j > 0 with A_j > 0; n + 1 when there is none (zero code).
    std::size_t min_positive_weight() const;
    // A_j = A_{n-j} for all j (forced whenever the code contains all-ones).
    bool mirror_symmetric() const;

    bool operator==(const WeightDistribution&) const = default;
};

// Binary linear code held as an rref basis, so equal codes (in a fixed
// coordinate order) compare equal structurally.
class BinaryCode {
  public:
    BinaryCode() = default;
    explicit BinaryCode(std::size_t n) : n_(n), basis_(0, n) {}

    // Any spanning set; reduced to rref, zero rows dropped.
    static BinaryCode from_rows(const BitMatrix& rows);
    static BinaryCode zero(std::size_t n) { return BinaryCode(n); }
    static BinaryCode full(std::size_t n) { return from_rows(BitMatrix::identity(n)); }

    std::size_t length() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const BitMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const BitVector& v) const;
    bool contains_all_ones() const;

    bool operator==(const BinaryCode&) const = default;

  private:
    std::size_t n_ = 0;
    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

// Exact counts over all 2^dim codewords, Gray-code order (one row xor per
// step). Throws guard_error above the enumeration guard.
WeightDistribution weight_distribution(const BinaryCode& c);

// Distribution of the dual [n, n-k] code via the binary Krawtchouk transform
// divided by 2^k. Throws input_error when w is not a valid distribution of an
// [n,k] code (non-integer or negative output).
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t k);

BinaryCode dual(const BinaryCode& c);

// <c, v>; throws input_error when v is already a codeword.
BinaryCode extend(const BinaryCode& c, const BitVector& v);

// { x in c : <x,v> = 0 }; dimension drops by 0 or 1.
BinaryCode intersect_hyperplane(const BinaryCode& c, const BitVector& v);

// Lemma-style admissibility of a residue candidate:
//   b1  doubly even  (all A_j = 0 for j not divisible by 4)
//   b2  contains the all-ones vector
//   b3  dual minimum weight at least 4 (A_1 = A_2 = A_3 = 0 in the dual)
struct AdmissibilityReport {
    bool b1 = false;
    bool b2 = false;
    bool b3 = false;
    bool all() const { return b1 && b2 && b3; }
};
AdmissibilityReport residue_admissibility(const BinaryCode& c);

// b1 and b2 alone, decided on the basis (row weights mod 4, pairwise
// orthogonality, all-ones membership) so no enumeration guard applies.
bool is_doubly_even(const BinaryCode& c);

// The fixed 6x32 first-order Reed-Muller generator used as the dimension-6
// base point at length 32.
BinaryCode rm15();

// Smallest positive weight; computed on whichever of code/dual fits under the
// guard, the other side recovered by the transform. Returns n + 1 for the
// zero code.
std::size_t min_weight(const BinaryCode& c);

// .g2m text format: '#' comment lines, one row per line over {0,1}, internal
// spaces ignored. The writer emits no spaces.
BinaryCode read_g2m(std::istream& in);
void write_g2m(std::ostream& out, const BinaryCode& c, const std::string& comment = "");

}  // namespace z4forge
