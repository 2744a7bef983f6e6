#include "z4forge/paperdata.hpp"

#include <map>
#include <sstream>

#include "paper_assets.hpp"
#include "z4forge/errors.hpp"

namespace z4forge::paperdata {

std::vector<Z4Vector> NamedArtifact::z4_rows() const {
    if (kind != ArtifactKind::figure_matrix_A && kind != ArtifactKind::full_generator)
        throw input_error("artifact " + name + " has no matrix payload");
    return parse_z4_matrix(text);
}

BitMatrix NamedArtifact::binary_matrix() const {
    auto rows = z4_rows();
    BitMatrix m(0, rows.empty() ? 0 : rows[0].size());
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r.get(j) > 1) throw input_error("artifact " + name + " is not binary");
        m.append_row(r.mod2());
    }
    return m;
}

BitVector NamedArtifact::support_vector(std::size_t n) const {
    if (kind != ArtifactKind::support_set)
        throw input_error("artifact " + name + " has no support payload");
    BitVector v(n);
    for (std::size_t p : support) {
        if (p == 0 || p > n) throw input_error("artifact " + name + ": support position out of range");
        v.set(p - 1, true);
    }
    return v;
}

namespace {

std::map<std::string, NamedArtifact> make_registry() {
    std::map<std::string, NamedArtifact> reg;
    auto add_matrix = [&](const std::string& name, ArtifactKind kind, const char* text) {
        reg[name] = NamedArtifact{name, kind, text, {}};
    };
    auto add_support = [&](const std::string& name, std::vector<std::size_t> sup) {
        reg[name] = NamedArtifact{name, ArtifactKind::support_set, "", std::move(sup)};
    };

    using namespace assets;
    add_matrix("RM15", ArtifactKind::full_generator, kRM15);
    add_matrix("G40", ArtifactKind::full_generator, kG40);
    add_matrix("C40_7prime", ArtifactKind::figure_matrix_A, kC40_7PRIME_A);
    const char* const c32[] = {kC32_7, kC32_8, kC32_9, kC32_10, kC32_11,
                               kC32_12, kC32_13, kC32_14, kC32_15};
    for (int i = 7; i <= 15; ++i)
        add_matrix("C32_" + std::to_string(i), ArtifactKind::figure_matrix_A, c32[i - 7]);
    const char* const c40[] = {kC40_8, kC40_9, kC40_10, kC40_11, kC40_12, kC40_13,
                               kC40_14, kC40_15, kC40_16, kC40_17, kC40_18, kC40_19};
    for (int i = 8; i <= 19; ++i)
        add_matrix("C40_" + std::to_string(i), ArtifactKind::figure_matrix_A, c40[i - 8]);

    for (const auto& row : table32()) add_support("V32_" + std::to_string(row.index), row.support);
    for (const auto& row : table40()) add_support("W40_" + std::to_string(row.index), row.support);
    add_support("N32_V", {1, 2, 3, 4, 5, 9, 17, 29});
    add_support("N40_W", {4, 8, 13, 22, 23, 34, 36, 39});
    add_support("C40_7PRIME_V", {1, 3, 4, 6, 8, 9, 10, 11, 12, 13, 18, 20});
    return reg;
}

const std::map<std::string, NamedArtifact>& registry() {
    static const std::map<std::string, NamedArtifact> reg = make_registry();
    return reg;
}

}  // namespace

const NamedArtifact& load(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw input_error("unknown artifact name: " + name);
    return it->second;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) {
        (void)v;
        names.push_back(k);
    }
    return names;
}

const std::vector<TableRow>& table32() {
    static const std::vector<TableRow> rows = {
        {7, {1, 2, 3, 4}, {{4, 1}, {8, 0}, {12, 7}, {16, 110}}},
        {8, {1, 2, 5, 6}, {{4, 3}, {8, 0}, {12, 21}, {16, 206}}},
        {9, {1, 2, 7, 8}, {{4, 6}, {8, 4}, {12, 42}, {16, 406}}},
        {10, {1, 2, 9, 10}, {{4, 10}, {8, 12}, {12, 102}, {16, 774}}},
        {11, {1, 2, 11, 12}, {{4, 16}, {8, 36}, {12, 208}, {16, 1526}}},
        {12, {1, 2, 13, 14}, {{4, 28}, {8, 84}, {12, 420}, {16, 3030}}},
        {13, {1, 2, 17, 18}, {{4, 36}, {8, 196}, {12, 924}, {16, 5878}}},
        {14, {1, 2, 19, 20}, {{4, 48}, {8, 428}, {12, 1936}, {16, 11558}}},
        {15, {1, 2, 21, 22}, {{4, 72}, {8, 892}, {12, 3960}, {16, 22918}}},
    };
    return rows;
}

const std::vector<TableRow>& table40() {
    static const std::vector<TableRow> rows = {
        {8, {1, 2, 4, 29}, {{4, 1}, {8, 0}, {12, 1}, {16, 35}, {20, 180}}},
        {9, {1, 2, 5, 33}, {{4, 3}, {8, 0}, {12, 3}, {16, 75}, {20, 348}}},
        {10, {1, 2, 7, 31}, {{4, 6}, {8, 1}, {12, 10}, {16, 150}, {20, 688}}},
        {11, {1, 2, 9, 10}, {{4, 10}, {8, 6}, {12, 22}, {16, 313}, {20, 1344}}},
        {12, {1, 2, 11, 17}, {{4, 15}, {8, 21}, {12, 48}, {16, 634}, {20, 2658}}},
        {13, {1, 2, 12, 39}, {{4, 22}, {8, 56}, {12, 102}, {16, 1271}, {20, 5288}}},
        {14, {1, 2, 13, 27}, {{4, 29}, {8, 99}, {12, 280}, {16, 2620}, {20, 10326}}},
        {15, {1, 2, 14, 37}, {{4, 37}, {8, 175}, {12, 688}, {16, 5296}, {20, 20374}}},
        {16, {1, 2, 15, 35}, {{4, 47}, {8, 313}, {12, 1548}, {16, 10694}, {20, 40330}}},
        {17, {1, 2, 20, 36}, {{4, 57}, {8, 509}, {12, 3436}, {16, 21698}, {20, 79670}}},
        {18, {1, 2, 21, 28}, {{4, 68}, {8, 845}, {12, 7344}, {16, 43826}, {20, 157976}}},
        {19, {1, 2, 24, 32}, {{4, 84}, {8, 1533}, {12, 15184}, {16, 87938}, {20, 314808}}},
    };
    return rows;
}

const EnumeratorTerms& c40_7_residue_terms() {
    static const EnumeratorTerms t = {{0, 1}, {16, 15}, {20, 96}, {24, 15}, {40, 1}};
    return t;
}

const EnumeratorTerms& c40_7_dual_leading_terms() {
    static const EnumeratorTerms t = {
        {4, 1510},       {6, 59520},       {8, 1203885},     {10, 13235584},  {12, 87323080},
        {14, 362540160}, {16, 982189650},  {18, 1771386240}, {20, 2154055332},
    };
    return t;
}

const EnumeratorTerms& c40_7prime_residue_terms() {
    static const EnumeratorTerms t = {{0, 1},  {12, 1}, {16, 11}, {20, 102},
                                      {24, 11}, {28, 1}, {40, 1}};
    return t;
}

const EnumeratorTerms& c40_7prime_dual_leading_terms() {
    static const EnumeratorTerms t = {
        {4, 1542},       {6, 59264},      {8, 1204653},     {10, 13234816},  {12, 87321928},
        {14, 362544000}, {16, 982186834}, {18, 1771383424}, {20, 2154061668},
    };
    return t;
}

const EnumeratorTerms& known_dim11_residue_terms_32() {
    static const EnumeratorTerms t = {{0, 1}, {12, 496}, {16, 1054}, {20, 496}, {32, 1}};
    return t;
}

const EnumeratorTerms& known_dim13_residue_terms_40() {
    static const EnumeratorTerms t = {{0, 1},    {12, 156}, {16, 1911}, {20, 4056},
                                      {24, 1911}, {28, 156}, {40, 1}};
    return t;
}

std::vector<Z4Vector> parse_z4_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_z4_rows(in);
}

ExternalList parse_external_list(const std::string& text) {
    ExternalList list;
    std::istringstream in(text);
    std::string line;
    std::vector<Z4Vector> block;
    std::size_t lineno = 0;
    auto block_index = [&]() { return list.entries.size() + 1; };
    while (std::getline(in, line)) {
        ++lineno;
        std::string clean;
        bool is_digit_row = true;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch < '0' || ch > '3') {
                is_digit_row = false;
                break;
            }
            clean.push_back(ch);
        }
        const bool is_row = is_digit_row && clean.size() == 16;
        if (is_row) {
            block.push_back(Z4Vector::from_string(clean));
            if (block.size() == 16) {
                list.entries.push_back({block_index(), std::move(block)});
                block.clear();
            }
            continue;
        }
        // Blank and label lines may only separate complete blocks.
        if (!block.empty())
            throw input_error("external list: malformed block " + std::to_string(block_index()) +
                              " interrupted at line " + std::to_string(lineno));
    }
    if (!block.empty())
        throw input_error("external list: malformed block " + std::to_string(block_index()) +
                          " truncated at end of input");
    return list;
}

Z4Code build_registry_code(const std::string& name) {
    const NamedArtifact& art = load(name);
    if (name == "G40") return complete_self_dual(art.z4_rows(), 40);
    if (art.kind != ArtifactKind::figure_matrix_A)
        throw input_error("artifact " + name + " does not build a Z4 code");
    auto a_rows = art.z4_rows();
    const std::size_t k = a_rows.size();
    const std::size_t n = k + a_rows[0].size();
    std::vector<Z4Vector> upper;
    for (std::size_t i = 0; i < k; ++i) {
        Z4Vector row(n);
        row.set(i, 1);
        for (std::size_t j = 0; j < a_rows[i].size(); ++j) {
            const unsigned e = a_rows[i].get(j);
            if (e) row.set(k + j, e);
        }
        upper.push_back(std::move(row));
    }
    return complete_self_dual(upper, n);
}

BinaryCode build_b32(int i) {
    if (i < 6 || i > 15) throw input_error("build_b32: index out of range");
    BinaryCode b = rm15();
    for (int j = 7; j <= i; ++j) {
        const auto& v = load("V32_" + std::to_string(j));
        b = extend(b, v.support_vector(32));
    }
    return b;
}

BinaryCode build_b40(int i) {
    if (i < 7 || i > 19) throw input_error("build_b40: index out of range");
    BitMatrix base(0, 40);
    for (const auto& row : load("G40").z4_rows()) base.append_row(row.mod2());
    BinaryCode b = BinaryCode::from_rows(base);
    for (int j = 8; j <= i; ++j) {
        const auto& w = load("W40_" + std::to_string(j));
        b = extend(b, w.support_vector(40));
    }
    return b;
}

BinaryCode n32() { return extend(rm15(), load("N32_V").support_vector(32)); }

BinaryCode n40() { return extend(build_b40(7), load("N40_W").support_vector(40)); }

BinaryCode c40_7prime_residue() {
    BitVector v = load("C40_7PRIME_V").support_vector(40);
    return extend(intersect_hyperplane(build_b40(7), v), v);
}

}  // namespace z4forge::paperdata
