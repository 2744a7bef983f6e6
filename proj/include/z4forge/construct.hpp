#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "z4forge/bincode.hpp"
#include "z4forge/z4code.hpp"

namespace z4forge {

// Residue candidate normalized to the (A | I~_k) generator shape: columns are
// permuted so the k pivots sit on the right, the first row is the all-ones
// vector, and rows 2..k carry the identity tail. D completes G1 to a
// generator matrix of dual(c1); its choice is canonicalized by rref
// completion and does not affect the candidate set.
struct ConstructionFrame {
    BinaryCode c1;                  // original coordinates
    std::vector<std::size_t> perm;  // permuted position -> original column
    BitMatrix g1;                   // k x n (permuted): (A | I~_k), row 0 all-ones
    BitMatrix a_block;              // k x (n-k): the A part, row 0 all-ones
    BitMatrix d_block;              // (n-2k) x n (permuted)

    std::size_t k() const { return g1.rows(); }
    std::size_t n() const { return g1.cols(); }
};

// Requires c1 doubly even (b1), containing all-ones (b2), 2k <= n and
// length divisible by 8. Deterministic for fixed input.
ConstructionFrame make_frame(const BinaryCode& c1);

// Which entries of B are taken as independent bits.
enum class Reduction {
    all_ones,  // row 1 of B forced to zero: (k-1)(k-2)/2 bits, codes contain the all-ones vector
    free_bits  // full strict upper triangle plus the (1,1) entry: 1 + k(k-1)/2 bits
};

struct FreeBits {
    std::size_t k = 0;
    Reduction mode = Reduction::all_ones;
    std::vector<std::uint64_t> words;  // packed bits, low to high

    static std::size_t count(std::size_t k, Reduction mode);
    static FreeBits from_index(std::size_t k, Reduction mode, std::uint64_t index);
    static FreeBits from_words(std::size_t k, Reduction mode, std::vector<std::uint64_t> words);

    std::size_t bit_count() const { return count(k, mode); }
    bool get(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1u; }
    bool operator<(const FreeBits& o) const { return words < o.words; }
    bool operator==(const FreeBits&) const = default;
    std::string to_hex() const;
};

// Unique completion of the free bits to the k x k matrix B of the generator
// (A  I~_k + 2B ; 2D): sub-diagonal entries come from pairwise orthogonality
// mod 4, the diagonal from each row's Euclidean weight mod 8, and the first
// column from the row-parity condition against the all-ones row. Throws
// input_error only when the frame's residue violates (b1)/(b2).
BitMatrix complete_b(const ConstructionFrame& frame, const FreeBits& fb);

// Assemble the generator matrix over Z4, undo the frame permutation and
// canonicalize. The result has residue exactly c1 and is self-dual Type II.
Z4Code build_code(const ConstructionFrame& frame, const BitMatrix& b);

struct CensusConfig {
    bool exhaustive = true;
    Reduction reduction = Reduction::all_ones;
    std::uint64_t seed = 0;
    std::uint64_t limit = 0;  // random mode: number of sampled candidates
    unsigned workers = 0;     // 0 = available parallelism
    // Called (serialized) for every extremal hit; used by the CLI --emit path.
    std::function<void(const FreeBits&, const Z4Code&)> on_extremal;
};

struct CensusReport {
    std::uint64_t n_candidates = 0;
    std::uint64_t n_type_ii = 0;
    std::uint64_t n_extremal = 0;
    std::vector<std::pair<Fingerprint, std::uint64_t>> fingerprint_classes;
    std::optional<FreeBits> representative;  // lexicographically least extremal fb
    bool exhaustive = true;
    Reduction reduction = Reduction::all_ones;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    double elapsed_seconds = 0;  // informational; not part of the stable report body
};

// Sweep the free-bit space (exhaustive needs <= 21 bits), run the extremality
// decomposition on every candidate, and tally fingerprint classes of the
// extremal hits. Identical reports for any worker count.
CensusReport census(const ConstructionFrame& frame, const CensusConfig& config);

struct ExtendConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;  // random-mode candidate budget
    unsigned workers = 0;
};

// Lemma-style residue extension: given an extremal Type II code and a weight-4
// vector v outside its residue with <residue, v> doubly even, search the
// frame of the extended residue for an extremal code (exhaustive when the
// free-bit space fits, else seeded random sampling).
Z4Code lemma3_extend(const Z4Code& c, const BitVector& v, const ExtendConfig& config = {});

}  // namespace z4forge
