#include "z4forge/construct.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "z4forge/errors.hpp"

namespace z4forge {

namespace {

unsigned default_workers(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

ConstructionFrame make_frame(const BinaryCode& c1) {
    const std::size_t n = c1.length();
    const std::size_t k = c1.dim();
    if (n % 8 != 0) throw input_error("make_frame: length not divisible by 8");
    if (2 * k > n) throw input_error("make_frame: dimension exceeds n/2");
    if (k == 0) throw input_error("make_frame: zero code");
    if (!is_doubly_even(c1)) throw input_error("make_frame: residue candidate is not doubly even (b1)");
    if (!c1.contains_all_ones()) throw input_error("make_frame: residue candidate misses the all-ones vector (b2)");

    ConstructionFrame f;
    f.c1 = c1;

    // Pivot columns move to the right, everything else keeps its order; the
    // rref basis then reads (A0 | I_k). Replacing the first row by the sum of
    // all rows (the all-ones vector) gives the (A | I~_k) shape.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : c1.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) f.perm.push_back(c);
    for (std::size_t p : c1.pivots()) f.perm.push_back(p);

    auto permute = [&](const BitVector& v) {
        BitVector out(n);
        for (std::size_t j = 0; j < n; ++j)
            if (v.get(f.perm[j])) out.set(j, true);
        return out;
    };

    f.g1 = BitMatrix(0, n);
    f.g1.append_row(BitVector::all_ones(n));
    for (std::size_t i = 1; i < k; ++i) f.g1.append_row(permute(c1.basis().row(i)));

    f.a_block = BitMatrix(0, n - k);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector a(n - k);
        for (std::size_t j = 0; j < n - k; ++j)
            if (f.g1.get(i, j)) a.set(j, true);
        f.a_block.append_row(std::move(a));
    }

    BinaryCode dual_c1 = dual(c1);
    f.d_block = BitMatrix(0, n);
    for (std::size_t t = 0; t < dual_c1.dim(); ++t) {
        const std::size_t p = dual_c1.pivots()[t];
        if (std::find(c1.pivots().begin(), c1.pivots().end(), p) != c1.pivots().end()) continue;
        f.d_block.append_row(permute(dual_c1.basis().row(t)));
    }
    return f;
}

std::size_t FreeBits::count(std::size_t k, Reduction mode) {
    if (k < 2) throw input_error("FreeBits: dimension below 2");
    return mode == Reduction::all_ones ? (k - 1) * (k - 2) / 2 : 1 + k * (k - 1) / 2;
}

FreeBits FreeBits::from_index(std::size_t k, Reduction mode, std::uint64_t index) {
    const std::size_t bits = count(k, mode);
    if (bits > 64) throw input_error("FreeBits: index form needs <= 64 bits");
    if (bits < 64 && index >= (std::uint64_t(1) << bits)) throw input_error("FreeBits: index out of range");
    FreeBits fb;
    fb.k = k;
    fb.mode = mode;
    fb.words.assign((bits + 63) / 64, 0);
    if (!fb.words.empty()) fb.words[0] = index;
    return fb;
}

FreeBits FreeBits::from_words(std::size_t k, Reduction mode, std::vector<std::uint64_t> words) {
    const std::size_t bits = count(k, mode);
    if (words.size() != (bits + 63) / 64) throw input_error("FreeBits: word count mismatch");
    if (bits % 64) words.back() &= (std::uint64_t(1) << (bits % 64)) - 1;
    FreeBits fb;
    fb.k = k;
    fb.mode = mode;
    fb.words = std::move(words);
    return fb;
}

std::string FreeBits::to_hex() const {
    std::ostringstream os;
    os << std::hex;
    for (auto it = words.rbegin(); it != words.rend(); ++it) os << *it << (it + 1 == words.rend() ? "" : "_");
    return os.str();
}

namespace {

// Orthogonality data of the frame rows: eps(i,j) is half the intersection
// size of rows i and j mod 4, delta(i) half the row weight mod 8.
struct CompletionTable {
    std::size_t k = 0;
    std::vector<std::uint32_t> eps;  // row i: bit j
    std::uint32_t delta = 0;

    explicit CompletionTable(const ConstructionFrame& frame) {
        k = frame.k();
        if (k > 32) throw input_error("completion: dimension above 32");
        eps.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t w = frame.g1.row(i).weight();
            if (w % 4 != 0) throw input_error("completion: row weight not divisible by 4 (b1 violated)");
            if ((w % 8) / 4) delta |= std::uint32_t(1) << i;
            for (std::size_t j = i + 1; j < k; ++j) {
                const std::size_t m = frame.g1.row(i).and_weight(frame.g1.row(j));
                if (m % 2 != 0) throw input_error("completion: odd row intersection (b1 violated)");
                if ((m % 4) / 2) {
                    eps[i] |= std::uint32_t(1) << j;
                    eps[j] |= std::uint32_t(1) << i;
                }
            }
        }
        if (delta & 1u) throw input_error("completion: all-ones row weight not divisible by 8");
    }

    bool eps_at(std::size_t i, std::size_t j) const { return (eps[i] >> j) & 1u; }
    bool delta_at(std::size_t i) const { return (delta >> i) & 1u; }
};

BitMatrix complete_with(const CompletionTable& t, const FreeBits& fb) {
    const std::size_t k = t.k;
    if (fb.k != k) throw input_error("complete_b: free-bit dimension mismatch");
    BitMatrix b(k, k);
    std::size_t idx = 0;
    if (fb.mode == Reduction::free_bits) {
        b.set(0, 0, fb.get(idx++));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) b.set(i, j, fb.get(idx++));
    } else {
        // Row 0 stays zero; free entries fill the strict upper triangle of
        // rows 1..k-1.
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) b.set(i, j, fb.get(idx++));
    }
    // Diagonal, then sub-diagonal entries off column 0, then column 0 from the
    // row parity condition.
    for (std::size_t j = 1; j < k; ++j)
        b.set(j, j, t.delta_at(j) ^ t.eps_at(0, j) ^ b.get(0, j));
    for (std::size_t j = 2; j < k; ++j)
        for (std::size_t l = 1; l < j; ++l) b.set(j, l, t.eps_at(j, l) ^ b.get(l, j));
    for (std::size_t j = 1; j < k; ++j) {
        bool parity = false;
        for (std::size_t l = 1; l < k; ++l) parity ^= b.get(j, l);
        b.set(j, 0, parity ^ t.eps_at(0, j) ^ b.get(0, j));
    }
    return b;
}

std::vector<Z4Vector> assemble_permuted_rows(const ConstructionFrame& frame, const BitMatrix& b) {
    const std::size_t n = frame.n();
    const std::size_t k = frame.k();
    std::vector<Z4Vector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Z4Vector row = Z4Vector::from_planes(frame.g1.row(i), BitVector(n));
        for (std::size_t j = 0; j < k; ++j)
            if (b.get(i, j)) {
                const std::size_t p = n - k + j;
                row.set(p, row.get(p) ^ 2u);
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

BitMatrix complete_b(const ConstructionFrame& frame, const FreeBits& fb) {
    CompletionTable table(frame);
    return complete_with(table, fb);
}

Z4Code build_code(const ConstructionFrame& frame, const BitMatrix& b) {
    const std::size_t n = frame.n();
    std::vector<Z4Vector> rows = assemble_permuted_rows(frame, b);
    for (std::size_t i = 0; i < frame.d_block.rows(); ++i)
        rows.push_back(Z4Vector::from_planes(BitVector(n), frame.d_block.row(i)));
    // Back to original coordinates.
    std::vector<Z4Vector> orig;
    orig.reserve(rows.size());
    for (const auto& r : rows) {
        Z4Vector v(n);
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned e = r.get(j);
            if (e) v.set(frame.perm[j], e);
        }
        orig.push_back(std::move(v));
    }
    return Z4Code::standard_form(orig, n);
}

namespace {

// Precomputed per-frame machinery for evaluating candidates fast: everything
// that does not depend on the free bits lives here (permuted coordinates).
class CensusEngine {
  public:
    CensusEngine(const ConstructionFrame& frame, Reduction mode)
        : frame_(frame), mode_(mode), table_(frame) {
        const std::size_t k = frame.k();
        res_perm_ = BinaryCode::from_rows(frame.g1);
        if (res_perm_.dim() != k) throw input_error("census: frame rows are dependent");
        WeightDistribution rd = weight_distribution(res_perm_);
        WeightDistribution td = macwilliams(rd, k);
        torsion_has_weight2_ = td.counts[2] > 0;

        // Residue classes of weight 4 and 8 with their coefficient masks over
        // the g1 rows; weight-4 classes (radius-1 queries) come first.
        BitVector cur(frame.n());
        std::uint32_t mask = 0;
        auto consider = [&]() {
            const std::size_t w = cur.weight();
            if (w != 4 && w != 8) return;
            classes_.push_back({cur, mask, detail::SyndromeEngine(res_perm_.basis(), cur),
                                w == 4 ? 1u : 0u});
        };
        const std::uint64_t total = std::uint64_t(1) << k;
        for (std::uint64_t i = 1; i < total; ++i) {
            const unsigned j = unsigned(std::countr_zero(i));
            cur ^= frame.g1.row(j);
            mask ^= std::uint32_t(1) << j;
            consider();
        }
        std::stable_sort(classes_.begin(), classes_.end(),
                         [](const ClassRec& a, const ClassRec& b) { return a.radius > b.radius; });
    }

    std::size_t bit_count() const { return FreeBits::count(frame_.k(), mode_); }

    FreeBits bits_for_index(std::uint64_t index, bool exhaustive, std::uint64_t seed) const {
        const std::size_t bits = bit_count();
        if (exhaustive) return FreeBits::from_index(frame_.k(), mode_, index);
        std::vector<std::uint64_t> words((bits + 63) / 64);
        for (std::size_t w = 0; w < words.size(); ++w)
            words[w] = splitmix64(seed ^ splitmix64(index * words.size() + w + 1));
        return FreeBits::from_words(frame_.k(), mode_, std::move(words));
    }

    struct Verdict {
        bool type_ii = false;
        bool extremal = false;
    };

    Verdict evaluate(const FreeBits& fb) const {
        Verdict v;
        BitMatrix b = complete_with(table_, fb);
        std::vector<Z4Vector> rows = assemble_permuted_rows(frame_, b);
        const std::size_t k = rows.size();
        for (std::size_t i = 0; i < k; ++i) {
            if (rows[i].euclidean_weight() % 8 != 0) return v;
            for (std::size_t j = i; j < k; ++j)
                if (rows[i].dot4(rows[j]) != 0) return v;
        }
        v.type_ii = true;
        if (torsion_has_weight2_) return v;  // every candidate has a Euclidean-weight-8 word
        for (const auto& cls : classes_) {
            Z4Vector x(frame_.n());
            std::uint32_t m = cls.mask;
            while (m) {
                x += rows[std::countr_zero(m)];
                m &= m - 1;
            }
            const std::uint32_t syn = cls.engine.syndrome(x.two_mask());
            if (cls.engine.within(syn, cls.radius)) return v;  // weight-8 word found
        }
        v.extremal = true;
        return v;
    }

    Z4Code build(const FreeBits& fb) const { return build_code(frame_, complete_with(table_, fb)); }

  private:
    struct ClassRec {
        BitVector word;
        std::uint32_t mask;
        detail::SyndromeEngine engine;
        unsigned radius;
    };

    const ConstructionFrame& frame_;
    Reduction mode_;
    CompletionTable table_;
    BinaryCode res_perm_;
    bool torsion_has_weight2_ = false;
    std::vector<ClassRec> classes_;
};

}  // namespace

CensusReport census(const ConstructionFrame& frame, const CensusConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    CensusEngine engine(frame, config.reduction);
    const std::size_t bits = engine.bit_count();

    std::uint64_t total;
    if (config.exhaustive) {
        if (bits > 21)
            throw budget_error("census: exhaustive sweep needs at most 2^21 candidates (" +
                               std::to_string(bits) + " free bits here); use random mode");
        total = std::uint64_t(1) << bits;
    } else {
        if (config.limit == 0) throw input_error("census: random mode needs a positive limit");
        total = config.limit;
    }

    const unsigned workers = default_workers(config.workers);
    struct Local {
        std::uint64_t type_ii = 0;
        std::vector<std::uint64_t> hits;  // candidate indices of extremal codes
    };
    std::vector<Local> locals(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        threads.emplace_back([&, w, lo, hi]() {
            for (std::uint64_t i = lo; i < hi; ++i) {
                FreeBits fb = engine.bits_for_index(i, config.exhaustive, config.seed);
                auto v = engine.evaluate(fb);
                if (v.type_ii) ++locals[w].type_ii;
                if (v.extremal) locals[w].hits.push_back(i);
            }
        });
    }
    for (auto& t : threads) t.join();

    CensusReport report;
    report.exhaustive = config.exhaustive;
    report.reduction = config.reduction;
    report.seed = config.seed;
    report.workers = workers;
    report.n_candidates = total;
    std::vector<std::uint64_t> hits;
    for (auto& l : locals) {
        report.n_type_ii += l.type_ii;
        hits.insert(hits.end(), l.hits.begin(), l.hits.end());
    }
    std::sort(hits.begin(), hits.end());
    report.n_extremal = hits.size();

    std::map<Fingerprint, std::uint64_t> classes;
    for (std::uint64_t i : hits) {
        FreeBits fb = engine.bits_for_index(i, config.exhaustive, config.seed);
        Z4Code code = engine.build(fb);
        ++classes[fingerprint(code)];
        if (!report.representative || fb < *report.representative) report.representative = fb;
        if (config.on_extremal) config.on_extremal(fb, code);
    }
    report.fingerprint_classes.assign(classes.begin(), classes.end());
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

Z4Code lemma3_extend(const Z4Code& c, const BitVector& v, const ExtendConfig& config) {
    std::vector<std::string> violated;
    ExtremalityReport rep = extremality(c);
    if (!rep.type_ii) violated.push_back("code is not Type II");
    else if (!rep.extremal) violated.push_back("code is not extremal");
    if (v.weight() != 4) violated.push_back("vector weight is not 4");
    BinaryCode res = c.residue();
    if (v.size() == res.length() && res.contains(v)) violated.push_back("vector lies in the residue code");
    if (violated.empty()) {
        BinaryCode ext = extend(res, v);
        if (!is_doubly_even(ext)) violated.push_back("extended residue is not doubly even");
    }
    if (!violated.empty()) {
        std::string msg = "lemma3_extend: hypothesis violated:";
        for (const auto& m : violated) msg += " [" + m + "]";
        throw input_error(msg);
    }

    BinaryCode ext = extend(res, v);
    ConstructionFrame frame = make_frame(ext);
    CensusEngine engine(frame, Reduction::all_ones);
    const std::size_t bits = engine.bit_count();
    const bool exhaustive = bits <= 21;
    const std::uint64_t total = exhaustive ? (std::uint64_t(1) << bits) : config.budget;
    const unsigned workers = default_workers(config.workers);

    // Rounds of workers * block indices; the smallest-index hit of the first
    // hitting round is the overall smallest-index hit, so the result does not
    // depend on the worker count.
    const std::uint64_t block = 1024;
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t round = 0; round * workers * block < total && best == UINT64_MAX; ++round) {
        std::vector<std::uint64_t> local_best(workers, UINT64_MAX);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(total, (round * workers + w) * block);
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + block);
            threads.emplace_back([&, w, lo, hi]() {
                for (std::uint64_t i = lo; i < hi; ++i) {
                    FreeBits fb = engine.bits_for_index(i, exhaustive, config.seed);
                    if (engine.evaluate(fb).extremal) {
                        local_best[w] = i;
                        return;
                    }
                }
            });
        }
        for (auto& t : threads) t.join();
        for (unsigned w = 0; w < workers; ++w) best = std::min(best, local_best[w]);
    }
    if (best == UINT64_MAX) {
        if (exhaustive)
            throw std::logic_error("lemma3_extend: exhaustive search found no extremal code");
        throw budget_error("lemma3_extend: random search budget exhausted with no extremal hit");
    }
    return engine.build(engine.bits_for_index(best, exhaustive, config.seed));
}

}  // namespace z4forge
