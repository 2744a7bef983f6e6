#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "z4forge/bincode.hpp"
#include "z4forge/construct.hpp"
#include "z4forge/z4code.hpp"

namespace z4forge::paperdata {

enum class ArtifactKind { figure_matrix_A, full_generator, support_set, table_row };

// One entry of the embedded data registry: either a verbatim matrix
// transcription or a support set. Matrix payloads keep the source spacing so
// they can be eyeballed against the original tables.
struct NamedArtifact {
    std::string name;
    ArtifactKind kind = ArtifactKind::figure_matrix_A;
    std::string text;                   // matrix payloads
    std::vector<std::size_t> support;   // support payloads, 1-based

    std::vector<Z4Vector> z4_rows() const;
    BitMatrix binary_matrix() const;
    BitVector support_vector(std::size_t n) const;  // 0-based embedding
};

// Fixed registry: C32_7..C32_15, C40_8..C40_19, C40_7prime, G40, RM15,
// V32_7..V32_15, W40_8..W40_19, N32_V, N40_W, C40_7PRIME_V.
// Unknown names raise input_error.
const NamedArtifact& load(const std::string& name);
std::vector<std::string> registry_names();

// Listed support/weight-distribution rows of the two extension tables.
struct TableRow {
    int index = 0;
    std::vector<std::size_t> support;  // 1-based
    std::vector<std::pair<std::size_t, std::uint64_t>> listed;  // (weight, count)
};
const std::vector<TableRow>& table32();  // indices 7..15, weights 4..16
const std::vector<TableRow>& table40();  // indices 8..19, weights 4..20

// Weight-enumerator reference values quoted for specific codes.
using EnumeratorTerms = std::vector<std::pair<std::size_t, std::uint64_t>>;
const EnumeratorTerms& c40_7_residue_terms();        // complete
const EnumeratorTerms& c40_7_dual_leading_terms();   // weights 4..20
const EnumeratorTerms& c40_7prime_residue_terms();   // complete
const EnumeratorTerms& c40_7prime_dual_leading_terms();
const EnumeratorTerms& known_dim11_residue_terms_32();  // previously known dimension-11 residue at length 32
const EnumeratorTerms& known_dim13_residue_terms_40();  // previously known dimension-13 residue at length 40

// Tolerant matrix parser: '#' comments, blank lines and internal spaces
// ignored, rows over {0,1,2,3} of equal length. Errors carry line/column.
std::vector<Z4Vector> parse_z4_matrix(const std::string& text);

// External 16x16 matrix list: blocks of 16 digit rows of length 16, separated
// by blank or label lines. Entries are indexed 1..N in order.
struct ExternalList {
    std::vector<std::pair<std::size_t, std::vector<Z4Vector>>> entries;
};
ExternalList parse_external_list(const std::string& text);

// Composition helpers over the registry.
Z4Code build_registry_code(const std::string& name);  // C32_i, C40_i, C40_7prime, G40
BinaryCode build_b32(int i);  // 6 <= i <= 15: iterated extensions from rm15()
BinaryCode build_b40(int i);  // 7 <= i <= 19: iterated extensions from the G40 residue
BinaryCode n32();
BinaryCode n40();
BinaryCode c40_7prime_residue();

}  // namespace z4forge::paperdata
