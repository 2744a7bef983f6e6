#include "z4forge/bincode.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "z4forge/errors.hpp"

namespace z4forge {

std::uint64_t WeightDistribution::total() const {
    std::uint64_t s = 0;
    for (std::uint64_t c : counts) s += c;
    return s;
}

std::size_t WeightDistribution::min_positive_weight() const {
    for (std::size_t j = 1; j <= n; ++j)
        if (counts[j]) return j;
    return n + 1;
}

bool WeightDistribution::mirror_symmetric() const {
    for (std::size_t j = 0; j <= n; ++j)
        if (counts[j] != counts[n - j]) return false;
    return true;
}

BinaryCode BinaryCode::from_rows(const BitMatrix& rows) {
    BinaryCode c;
    RrefResult rr = rref(rows);
    c.n_ = rows.cols();
    c.basis_ = std::move(rr.matrix);
    c.pivots_ = std::move(rr.pivots);
    return c;
}

bool BinaryCode::contains(const BitVector& v) const {
    if (v.size() != n_) throw input_error("contains: length mismatch");
    // Reduce against the rref basis; membership iff the remainder vanishes.
    BitVector rem = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        if (rem.get(pivots_[i])) rem ^= basis_.row(i);
    return rem.is_zero();
}

bool BinaryCode::contains_all_ones() const { return contains(BitVector::all_ones(n_)); }

WeightDistribution weight_distribution(const BinaryCode& c) {
    const std::size_t k = c.dim();
    if (k > kEnumGuardDim)
        throw guard_error("weight_distribution: dimension " + std::to_string(k) +
                          " exceeds the 2^28 enumeration guard; use macwilliams");
    WeightDistribution wd(c.length());
    BitVector cur(c.length());
    wd.counts[0] = 1;
    const std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= c.basis().row(std::countr_zero(i));
        ++wd.counts[cur.weight()];
    }
    return wd;
}

namespace {

// Binomial table with room for the Krawtchouk sums at n <= 64; entries fit in
// unsigned __int128 comfortably and in uint64 up to n = 64 anyway.
std::vector<std::vector<unsigned long long>> binomials(std::size_t n) {
    std::vector<std::vector<unsigned long long>> b(n + 1, std::vector<unsigned long long>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        b[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            b[i][j] = b[i - 1][j - 1] + (j <= i - 1 ? b[i - 1][j] : 0);
    }
    return b;
}

}  // namespace

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t k) {
    const std::size_t n = w.n;
    if (n > 64) throw input_error("macwilliams: length too large");
    if (w.counts.size() != n + 1) throw input_error("macwilliams: malformed distribution");
    if (w.total() != (std::uint64_t(1) << k))
        throw input_error("macwilliams: distribution total is not 2^k");
    const auto bin = binomials(n);
    WeightDistribution out(n);
    for (std::size_t j = 0; j <= n; ++j) {
        // A'_j = 2^-k * sum_i A_i K_j(i),  K_j(i) = sum_t (-1)^t C(i,t) C(n-i, j-t)
        __int128 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (!w.counts[i]) continue;
            __int128 kr = 0;
            for (std::size_t t = 0; t <= j; ++t) {
                if (t > i || j - t > n - i) continue;
                __int128 term = (__int128)bin[i][t] * (__int128)bin[n - i][j - t];
                kr += (t & 1) ? -term : term;
            }
            acc += (__int128)w.counts[i] * kr;
        }
        if (acc < 0 || (acc & (((__int128)1 << k) - 1)))
            throw input_error("macwilliams: input is not a code distribution");
        acc >>= k;
        if (acc > (__int128)UINT64_MAX)
            throw input_error("macwilliams: output count overflow");
        out.counts[j] = (std::uint64_t)acc;
    }
    return out;
}

BinaryCode dual(const BinaryCode& c) { return BinaryCode::from_rows(nullspace_basis(c.basis())); }

BinaryCode extend(const BinaryCode& c, const BitVector& v) {
    if (v.size() != c.length()) throw input_error("extend: length mismatch");
    if (c.contains(v)) throw input_error("extend: vector already in the code");
    BitMatrix rows = c.basis();
    rows.append_row(v);
    return BinaryCode::from_rows(rows);
}

BinaryCode intersect_hyperplane(const BinaryCode& c, const BitVector& v) {
    if (v.size() != c.length()) throw input_error("intersect_hyperplane: length mismatch");
    // If some basis row meets v oddly, use it to fix up the others and drop it.
    std::size_t piv = c.dim();
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (c.basis().row(i).dot(v)) {
            piv = i;
            break;
        }
    if (piv == c.dim()) return c;
    BitMatrix rows(0, c.length());
    for (std::size_t i = 0; i < c.dim(); ++i) {
        if (i == piv) continue;
        BitVector r = c.basis().row(i);
        if (r.dot(v)) r ^= c.basis().row(piv);
        rows.append_row(std::move(r));
    }
    return BinaryCode::from_rows(rows);
}

AdmissibilityReport residue_admissibility(const BinaryCode& c) {
    AdmissibilityReport rep;
    WeightDistribution wd = weight_distribution(c);
    rep.b1 = true;
    for (std::size_t j = 0; j <= wd.n; ++j)
        if (j % 4 != 0 && wd.counts[j]) {
            rep.b1 = false;
            break;
        }
    rep.b2 = c.contains_all_ones();
    WeightDistribution dd = macwilliams(wd, c.dim());
    rep.b3 = dd.counts[1] == 0 && dd.counts[2] == 0 && dd.counts[3] == 0;
    return rep;
}

bool is_doubly_even(const BinaryCode& c) {
    // A binary code is doubly even iff every basis row has weight divisible by
    // 4 and all basis pairs intersect evenly.
    for (std::size_t i = 0; i < c.dim(); ++i) {
        if (c.basis().row(i).weight() % 4 != 0) return false;
        for (std::size_t j = i + 1; j < c.dim(); ++j)
            if (c.basis().row(i).and_weight(c.basis().row(j)) % 2 != 0) return false;
    }
    return true;
}

BinaryCode rm15() {
    static const std::vector<std::string> rows = {
        "11111111111111111111111111111111",
        "11111111111111110000000000000000",
        "11111111000000001111111100000000",
        "11110000111100001111000011110000",
        "11001100110011001100110011001100",
        "10101010101010101010101010101010",
    };
    return BinaryCode::from_rows(BitMatrix::from_strings(rows));
}

std::size_t min_weight(const BinaryCode& c) {
    if (c.dim() == 0) return c.length() + 1;
    if (c.dim() <= kEnumGuardDim) return weight_distribution(c).min_positive_weight();
    const std::size_t codim = c.length() - c.dim();
    if (codim <= kEnumGuardDim) {
        WeightDistribution dd = weight_distribution(dual(c));
        return macwilliams(dd, codim).min_positive_weight();
    }
    throw guard_error("min_weight: neither side fits under the enumeration guard");
}

BinaryCode read_g2m(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string clean;
        bool comment = false;
        for (std::size_t col = 0; col < line.size(); ++col) {
            char ch = line[col];
            if (ch == '#') {
                comment = true;
                break;
            }
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch != '0' && ch != '1')
                throw input_error("g2m: bad symbol at line " + std::to_string(lineno) +
                                  ", column " + std::to_string(col + 1));
            clean.push_back(ch);
        }
        (void)comment;
        if (clean.empty()) continue;
        if (!rows.empty() && clean.size() != rows[0].size())
            throw input_error("g2m: ragged rows at line " + std::to_string(lineno));
        rows.push_back(std::move(clean));
    }
    if (rows.empty()) throw input_error("g2m: no rows");
    return BinaryCode::from_rows(BitMatrix::from_strings(rows));
}

void write_g2m(std::ostream& out, const BinaryCode& c, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    for (std::size_t i = 0; i < c.dim(); ++i) out << c.basis().row(i).to_string() << "\n";
}

}  // namespace z4forge
