// z4forge: exact-arithmetic toolkit for self-dual codes over the integers
// mod 4 — verification, construction censuses and data-reproduction suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "z4forge/bincode.hpp"
#include "z4forge/construct.hpp"
#include "z4forge/errors.hpp"
#include "z4forge/paperdata.hpp"
#include "z4forge/z4code.hpp"

using nlohmann::ordered_json;
using namespace z4forge;
namespace pd = z4forge::paperdata;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

unsigned env_default_workers(unsigned cli_value) {
    if (cli_value) return cli_value;
    if (const char* env = std::getenv("Z4FORGE_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return unsigned(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string poly_string(const WeightDistribution& wd) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j <= wd.n; ++j) {
        if (!wd.counts[j]) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << wd.counts[j];
            continue;
        }
        if (wd.counts[j] != 1) os << wd.counts[j] << " ";
        os << "y^" << j;
    }
    if (first) os << "0";
    return os.str();
}

ordered_json dist_json(const WeightDistribution& wd) {
    ordered_json j = ordered_json::object();
    for (std::size_t w = 0; w <= wd.n; ++w)
        if (wd.counts[w]) j[std::to_string(w)] = wd.counts[w];
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct LoadedZ4 {
    Z4Code code;
    std::string source;
    std::string digest;
};

struct LoadedBinary {
    BinaryCode code;
    std::string source;
    std::string digest;
};

Z4Code rm15_census_representative() {
    auto frame = make_frame(rm15());
    CensusConfig cfg;
    cfg.exhaustive = true;
    auto report = census(frame, cfg);
    if (!report.representative) throw input_error("no extremal census member over RM15");
    return build_code(frame, complete_b(frame, *report.representative));
}

LoadedZ4 load_z4(const std::string& spec) {
    LoadedZ4 out;
    out.source = spec;
    if (!spec.empty() && spec[0] == '@') {
        const std::string name = spec.substr(1);
        if (name == "C32_CENSUS_REP")
            out.code = rm15_census_representative();
        else if (name == "C40_7")
            out.code = pd::build_registry_code("G40");
        else
            out.code = pd::build_registry_code(name);
    } else {
        std::istringstream in(read_file(spec));
        out.code = read_z4m(in);
    }
    std::ostringstream canon;
    write_z4m(canon, out.code);
    out.digest = fnv1a64(canon.str());
    return out;
}

LoadedBinary load_binary(const std::string& spec) {
    LoadedBinary out;
    out.source = spec;
    if (!spec.empty() && spec[0] == '@') {
        const std::string name = spec.substr(1);
        if (name == "RM15")
            out.code = rm15();
        else if (name == "N32")
            out.code = pd::n32();
        else if (name == "N40")
            out.code = pd::n40();
        else if (name == "C40_7PRIME_RES")
            out.code = pd::c40_7prime_residue();
        else if (name.rfind("B32_", 0) == 0)
            out.code = pd::build_b32(std::stoi(name.substr(4)));
        else if (name.rfind("B40_", 0) == 0)
            out.code = pd::build_b40(std::stoi(name.substr(4)));
        else
            throw input_error("unknown binary artifact: " + name);
    } else {
        std::istringstream in(read_file(spec));
        out.code = read_g2m(in);
    }
    std::ostringstream canon;
    write_g2m(canon, out.code);
    out.digest = fnv1a64(canon.str());
    return out;
}

void emit(bool as_json, const ordered_json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string reduction_name(Reduction r) { return r == Reduction::all_ones ? "all-ones" : "free"; }

ordered_json census_json(const CensusReport& r) {
    ordered_json j;
    j["mode"] = r.exhaustive ? "exhaustive" : "random";
    j["reduction"] = reduction_name(r.reduction);
    if (!r.exhaustive) j["seed"] = r.seed;
    j["workers"] = r.workers;
    j["candidates"] = r.n_candidates;
    j["type_ii"] = r.n_type_ii;
    j["extremal"] = r.n_extremal;
    ordered_json classes = ordered_json::array();
    for (const auto& [fp, count] : r.fingerprint_classes) {
        ordered_json c;
        c["count"] = count;
        c["n"] = fp.n;
        c["k1"] = fp.k1;
        c["k2"] = fp.k2;
        c["ew16"] = fp.ew16;
        ordered_json rc = ordered_json::object(), tc = ordered_json::object();
        for (std::size_t w = 0; w < fp.residue_counts.size(); ++w)
            if (fp.residue_counts[w]) rc[std::to_string(w)] = fp.residue_counts[w];
        for (std::size_t w = 0; w < fp.torsion_counts.size(); ++w)
            if (fp.torsion_counts[w]) tc[std::to_string(w)] = fp.torsion_counts[w];
        c["residue_distribution"] = rc;
        c["torsion_distribution"] = tc;
        classes.push_back(c);
    }
    j["fingerprint_classes"] = classes;
    if (r.representative) j["representative_fb"] = r.representative->to_hex();
    return j;
}

std::string census_text(const CensusReport& r) {
    std::ostringstream os;
    os << "mode: " << (r.exhaustive ? "exhaustive" : "random") << "\n";
    os << "reduction: " << reduction_name(r.reduction) << "\n";
    if (!r.exhaustive) os << "seed: " << r.seed << "\n";
    os << "workers: " << r.workers << "\n";
    os << "candidates: " << r.n_candidates << "\n";
    os << "type-ii: " << r.n_type_ii << "\n";
    os << "extremal: " << r.n_extremal << "\n";
    os << "fingerprint-classes: " << r.fingerprint_classes.size() << "\n";
    std::size_t idx = 0;
    for (const auto& [fp, count] : r.fingerprint_classes)
        os << "  class " << ++idx << ": count=" << count << " " << fp.to_string() << "\n";
    if (r.representative) os << "representative-fb: 0x" << r.representative->to_hex() << "\n";
    return os.str();
}

int cmd_check(const std::string& path, bool as_json) {
    LoadedZ4 in = load_z4(path);
    const Z4Code& c = in.code;
    const bool sd = is_self_dual(c);
    auto rep = extremality(c);

    ordered_json j;
    j["command"] = "check";
    j["input"] = in.source;
    j["input_digest"] = in.digest;
    j["n"] = c.length();
    j["k1"] = c.k1();
    j["k2"] = c.k2();
    j["self_dual"] = sd;
    j["type_ii"] = rep.type_ii;
    std::ostringstream os;
    os << "check " << in.source << "\n";
    os << "input-digest: " << in.digest << "\n";
    os << "n: " << c.length() << "\n";
    os << "k1: " << c.k1() << "\nk2: " << c.k2() << "\n";
    os << "self-dual: " << (sd ? "true" : "false") << "\n";
    os << "type-ii: " << (rep.type_ii ? "true" : "false") << "\n";
    if (rep.type_ii) {
        const char* method =
            rep.method == ExtremalityReport::Method::decomposition ? "decomposition" : "bruteforce";
        j["d_E"] = *rep.d_E;
        j["d_L"] = *rep.d_L;
        j["d_H"] = *rep.d_H;
        j["method"] = method;
        j["extremal"] = rep.extremal;
        os << "d_E: " << *rep.d_E << " (" << method << ")\n";
        os << "d_L: " << *rep.d_L << "\n";
        os << "d_H: " << *rep.d_H << "\n";
        os << "extremal: " << (rep.extremal ? "true" : "false") << "\n";
        if (rep.witness) {
            j["witness"] = rep.witness->to_string();
            os << "witness: " << rep.witness->to_string() << "\n";
        }
    } else {
        j["extremal"] = false;
        os << "extremal: false\n";
    }
    emit(as_json, j, os.str());
    return kExitOk;
}

int cmd_residue(const std::string& path, bool as_json) {
    LoadedZ4 in = load_z4(path);
    const Z4Code& c = in.code;
    const BinaryCode& res = c.residue();
    const BinaryCode& tor = c.torsion();

    ordered_json j;
    j["command"] = "residue";
    j["input"] = in.source;
    j["input_digest"] = in.digest;
    std::ostringstream os;
    os << "residue " << in.source << "\n";
    os << "input-digest: " << in.digest << "\n";
    os << "residue: [" << res.length() << "," << res.dim() << "]\n";
    ordered_json rrows = ordered_json::array(), trows = ordered_json::array();
    for (std::size_t i = 0; i < res.dim(); ++i) {
        os << "  " << res.basis().row(i).to_string() << "\n";
        rrows.push_back(res.basis().row(i).to_string());
    }
    os << "torsion: [" << tor.length() << "," << tor.dim() << "]\n";
    for (std::size_t i = 0; i < tor.dim(); ++i) {
        os << "  " << tor.basis().row(i).to_string() << "\n";
        trows.push_back(tor.basis().row(i).to_string());
    }
    j["residue_basis"] = rrows;
    j["torsion_basis"] = trows;
    if (res.dim() <= kEnumGuardDim) {
        auto rd = weight_distribution(res);
        os << "residue-distribution: " << poly_string(rd) << "\n";
        j["residue_distribution"] = dist_json(rd);
        if (dual(res) == tor) {
            auto td = macwilliams(rd, res.dim());
            os << "torsion-distribution: " << poly_string(td) << "\n";
            j["torsion_distribution"] = dist_json(td);
        }
    }
    emit(as_json, j, os.str());
    return kExitOk;
}

int cmd_wenum(const std::string& path, const std::string& kind, bool as_json) {
    ordered_json j;
    j["command"] = "wenum";
    j["kind"] = kind;
    std::ostringstream os;
    WeightDistribution wd;
    std::string source, digest;
    if (kind == "binary") {
        LoadedBinary in = load_binary(path);
        source = in.source;
        digest = in.digest;
        wd = weight_distribution(in.code);
    } else {
        LoadedZ4 in = load_z4(path);
        source = in.source;
        digest = in.digest;
        const std::size_t maxw = kind == "euclidean" ? 4 * in.code.length()
                                 : kind == "lee"     ? 2 * in.code.length()
                                                     : in.code.length();
        wd = WeightDistribution(maxw);
        enumerate_codewords(in.code, [&](const Z4Vector& v) {
            const std::size_t w = kind == "euclidean" ? v.euclidean_weight()
                                  : kind == "lee"     ? v.lee_weight()
                                                      : v.hamming_weight();
            ++wd.counts[w];
        });
    }
    j["input"] = source;
    j["input_digest"] = digest;
    os << "wenum --" << kind << " " << source << "\n";
    os << "input-digest: " << digest << "\n";
    os << "distribution: " << poly_string(wd) << "\n";
    j["distribution"] = dist_json(wd);
    emit(as_json, j, os.str());
    return kExitOk;
}

int cmd_construct(const std::string& residue_spec, const std::string& mode, std::uint64_t seed,
                  std::uint64_t limit, unsigned workers, const std::string& emit_dir, bool free_mode,
                  bool as_json) {
    LoadedBinary in = load_binary(residue_spec);
    auto frame = make_frame(in.code);
    CensusConfig cfg;
    cfg.exhaustive = mode == "exhaustive";
    cfg.reduction = free_mode ? Reduction::free_bits : Reduction::all_ones;
    cfg.seed = seed;
    cfg.limit = limit;
    cfg.workers = env_default_workers(workers);
    if (!emit_dir.empty())
        cfg.on_extremal = [&](const FreeBits& fb, const Z4Code& code) {
            const std::string out_path = emit_dir + "/extremal_" + fb.to_hex() + ".z4m";
            std::ofstream out(out_path);
            if (!out) throw input_error("cannot write " + out_path);
            write_z4m(out, code, "extremal candidate fb=0x" + fb.to_hex());
        };
    auto report = census(frame, cfg);

    ordered_json j;
    j["command"] = "construct";
    j["residue"] = in.source;
    j["input_digest"] = in.digest;
    j["free_bits"] = FreeBits::count(frame.k(), cfg.reduction);
    j.update(census_json(report));
    std::ostringstream os;
    os << "construct " << in.source << "\n";
    os << "input-digest: " << in.digest << "\n";
    os << "free-bits: " << FreeBits::count(frame.k(), cfg.reduction) << "\n";
    os << census_text(report);
    emit(as_json, j, os.str());
    std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
    return kExitOk;
}

int cmd_extend(const std::string& code_spec, const std::string& support_csv, std::uint64_t seed,
               unsigned workers, const std::string& out_path, bool as_json) {
    LoadedZ4 in = load_z4(code_spec);
    std::vector<std::size_t> support;
    std::stringstream ss(support_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const long v = std::strtol(item.c_str(), nullptr, 10);
        if (v <= 0 || std::size_t(v) > in.code.length())
            throw input_error("extend: support position out of range: " + item);
        support.push_back(std::size_t(v) - 1);  // CLI supports are 1-based
    }
    BitVector v = BitVector::from_support(in.code.length(), support);
    ExtendConfig cfg;
    cfg.seed = seed;
    cfg.workers = env_default_workers(workers);
    Z4Code out = lemma3_extend(in.code, v, cfg);
    auto rep = extremality(out);

    ordered_json j;
    j["command"] = "extend";
    j["input"] = in.source;
    j["input_digest"] = in.digest;
    j["support"] = support_csv;
    j["hypotheses"] =
        "checked: extremal Type II base, weight-4 vector outside the residue, doubly even extension";
    j["residue_dim"] = out.residue().dim();
    j["extremal"] = rep.extremal;
    std::ostringstream os;
    os << "extend " << in.source << " support {" << support_csv << "}\n";
    os << "input-digest: " << in.digest << "\n";
    os << "hypotheses: checked (extremal Type II base, weight-4 vector outside the residue, "
          "doubly even extension)\n";
    os << "residue-dim: " << out.residue().dim() << "\n";
    os << "extremal: " << (rep.extremal ? "true" : "false") << "\n";
    std::ostringstream code_text;
    write_z4m(code_text, out, "extension of " + in.source + " by {" + support_csv + "}");
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw input_error("cannot write " + out_path);
        f << code_text.str();
        os << "written: " << out_path << "\n";
        j["written"] = out_path;
    } else {
        os << code_text.str();
        j["code"] = code_text.str();
    }
    emit(as_json, j, os.str());
    return kExitOk;
}

// Claim tracker shared by the reproduction suites.
struct Claims {
    std::ostringstream text;
    ordered_json items = ordered_json::array();
    int failures = 0;

    template <typename A, typename B>
    void check(const std::string& name, const A& actual, const B& expected) {
        const bool ok = actual == expected;
        if (ok) {
            text << "ok " << name << "\n";
        } else {
            text << "FAIL " << name << " expected=" << expected << " actual=" << actual << "\n";
            ++failures;
        }
        ordered_json item;
        item["claim"] = name;
        item["pass"] = ok;
        items.push_back(item);
    }
    void check_true(const std::string& name, bool ok) { check(name, int(ok), 1); }
};

void reproduce_table(Claims& cl, int which) {
    const auto& rows = which == 1 ? pd::table32() : pd::table40();
    for (const auto& row : rows) {
        BinaryCode b = which == 1 ? pd::build_b32(row.index) : pd::build_b40(row.index);
        const std::string tag = "table" + std::to_string(which) + " row " + std::to_string(row.index);
        cl.check(tag + " dim", b.dim(), std::size_t(row.index));
        auto wd = weight_distribution(b);
        for (auto [w, count] : row.listed)
            cl.check(tag + " A_" + std::to_string(w), wd.counts[w], count);
        cl.check_true(tag + " mirror symmetry", wd.mirror_symmetric());
    }
}

void reproduce_figures(Claims& cl) {
    std::vector<std::string> names;
    for (int i = 7; i <= 15; ++i) names.push_back("C32_" + std::to_string(i));
    for (int i = 8; i <= 19; ++i) names.push_back("C40_" + std::to_string(i));
    names.push_back("G40");
    names.push_back("C40_7prime");
    for (const auto& name : names) {
        auto code = pd::build_registry_code(name);
        cl.check_true(name + " self-dual", is_self_dual(code));
        auto rep = extremality(code);
        cl.check_true(name + " type-ii", rep.type_ii);
        cl.check_true(name + " extremal (d_E=16)", rep.extremal && rep.d_E == 16);
        cl.check(name + " d_H", rep.d_H.value_or(0), std::size_t(4));
        cl.check(name + " d_L", rep.d_L.value_or(0), std::size_t(8));
        const std::size_t want_dim =
            name == "G40" || name == "C40_7prime" ? 7 : std::size_t(std::stoi(name.substr(4)));
        cl.check(name + " residue dim", code.residue().dim(), want_dim);
    }
    // Quoted enumerators for the two dimension-7 codes at length 40.
    auto g40 = pd::build_registry_code("G40");
    auto wd = weight_distribution(g40.residue());
    for (auto [w, c] : pd::c40_7_residue_terms())
        cl.check("C40_7 residue A_" + std::to_string(w), wd.counts[w], c);
    auto dd = macwilliams(wd, 7);
    for (auto [w, c] : pd::c40_7_dual_leading_terms())
        cl.check("C40_7 dual A_" + std::to_string(w), dd.counts[w], c);
    auto prime = pd::build_registry_code("C40_7prime");
    auto wdp = weight_distribution(prime.residue());
    for (auto [w, c] : pd::c40_7prime_residue_terms())
        cl.check("C40_7prime residue A_" + std::to_string(w), wdp.counts[w], c);
    auto ddp = macwilliams(wdp, 7);
    for (auto [w, c] : pd::c40_7prime_dual_leading_terms())
        cl.check("C40_7prime dual A_" + std::to_string(w), ddp.counts[w], c);
}

void reproduce_census32(Claims& cl, unsigned workers, std::ostringstream& extra) {
    CensusConfig cfg;
    cfg.exhaustive = true;
    cfg.workers = workers;
    auto rm_report = census(make_frame(rm15()), cfg);
    cl.check("rm15 census candidates", rm_report.n_candidates, std::uint64_t(1024));
    cl.check("rm15 census type-ii", rm_report.n_type_ii, std::uint64_t(1024));
    cl.check("rm15 census fingerprint classes", rm_report.fingerprint_classes.size(),
             std::size_t(1));
    extra << "rm15 census extremal count: " << rm_report.n_extremal << " of 1024\n";

    auto n32_report = census(make_frame(pd::n32()), cfg);
    cl.check("n32 census candidates", n32_report.n_candidates, std::uint64_t(32768));
    cl.check("n32 census extremal", n32_report.n_extremal, std::uint64_t(0));
}

void reproduce_census40(Claims& cl, unsigned workers) {
    CensusConfig cfg;
    cfg.exhaustive = true;
    cfg.workers = workers;
    auto report = census(make_frame(pd::n40()), cfg);
    cl.check("n40 census candidates", report.n_candidates, std::uint64_t(1) << 21);
    cl.check("n40 census extremal", report.n_extremal, std::uint64_t(0));
}

void reproduce_external(Claims& cl, const std::string& data_path) {
    auto list = pd::parse_external_list(read_file(data_path));
    cl.check_true("external list nonempty", !list.entries.empty());
    for (const auto& [index, rows] : list.entries) {
        std::vector<Z4Vector> upper;
        for (std::size_t i = 0; i < 16; ++i) {
            Z4Vector row(32);
            row.set(i, 1);
            for (std::size_t j = 0; j < 16; ++j) {
                const unsigned e = rows[i].get(j);
                if (e) row.set(16 + j, e);
            }
            upper.push_back(std::move(row));
        }
        auto code = complete_self_dual(upper, 32);
        const std::string tag = "external entry " + std::to_string(index);
        auto rep = extremality(code);
        cl.check_true(tag + " extremal type-ii", rep.type_ii && rep.extremal);
        const BinaryCode& res = code.residue();
        cl.check(tag + " residue dim", res.dim(), std::size_t(16));
        cl.check_true(tag + " residue doubly even self-dual",
                      is_doubly_even(res) && dual(res) == res);
    }
}

int cmd_reproduce(const std::string& suite, const std::string& data_path, bool long_ok,
                  unsigned workers, bool as_json) {
    Claims cl;
    std::ostringstream extra;
    workers = env_default_workers(workers);
    if (suite == "table1") {
        reproduce_table(cl, 1);
    } else if (suite == "table2") {
        reproduce_table(cl, 2);
    } else if (suite == "figures") {
        reproduce_figures(cl);
    } else if (suite == "census32") {
        reproduce_census32(cl, workers, extra);
    } else if (suite == "census40") {
        if (!long_ok) throw input_error("reproduce census40 is a long run; pass --long");
        reproduce_census40(cl, workers);
    } else if (suite == "external") {
        if (data_path.empty()) throw input_error("reproduce external needs --data <file>");
        reproduce_external(cl, data_path);
    } else {
        throw input_error("unknown suite: " + suite);
    }

    ordered_json j;
    j["command"] = "reproduce";
    j["suite"] = suite;
    j["claims"] = cl.items;
    j["failures"] = cl.failures;
    std::ostringstream os;
    os << "reproduce --suite " << suite << "\n" << cl.text.str() << extra.str();
    os << (cl.failures ? "result: FAIL (" + std::to_string(cl.failures) + " mismatches)\n"
                       : "result: ok\n");
    emit(as_json, j, os.str());
    return cl.failures ? kExitClaimMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and construction of self-dual codes over Z4"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable report");

    std::string path;
    auto* check = app.add_subcommand("check", "verify a code: duality, Type II, certified minima");
    check->add_option("path", path, "a .z4m file or @NAME artifact")->required();

    auto* residue = app.add_subcommand("residue", "print residue and torsion codes");
    residue->add_option("path", path, "a .z4m file or @NAME artifact")->required();

    auto* wenum = app.add_subcommand("wenum", "weight distributions");
    wenum->add_option("path", path, "a .z4m/.g2m file or @NAME artifact")->required();
    bool w_ham = false, w_lee = false, w_euc = false, w_bin = false;
    wenum->add_flag("--hamming", w_ham, "Hamming distribution");
    wenum->add_flag("--lee", w_lee, "Lee distribution");
    wenum->add_flag("--euclidean", w_euc, "Euclidean distribution");
    wenum->add_flag("--binary", w_bin, "binary code distribution");

    auto* construct = app.add_subcommand("construct", "sweep candidate completions over a residue");
    std::string residue_spec, mode = "exhaustive", emit_dir;
    std::uint64_t seed = 0, limit = 0;
    unsigned workers = 0;
    bool free_mode = false;
    construct->add_option("--residue", residue_spec, "a .g2m file or @NAME")->required();
    construct->add_option("--mode", mode, "exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    construct->add_option("--seed", seed, "random-mode seed");
    construct->add_option("--limit", limit, "random-mode candidate count");
    construct->add_option("--workers", workers,
                          "worker threads (default: Z4FORGE_WORKERS or hardware)");
    construct->add_option("--emit", emit_dir, "write each extremal hit as a .z4m file here");
    construct->add_flag("--free", free_mode, "use the unreduced parameterization");

    auto* extend =
        app.add_subcommand("extend", "extend an extremal code by a weight-4 residue vector");
    std::string code_spec, support_csv, out_path;
    extend->add_option("--code", code_spec, "a .z4m file or @NAME")->required();
    extend->add_option("--support", support_csv, "1-based coordinates, e.g. 1,2,3,4")->required();
    extend->add_option("--seed", seed, "random-mode seed");
    extend->add_option("--workers", workers, "worker threads");
    extend->add_option("--out", out_path, "output .z4m path");

    auto* reproduce = app.add_subcommand("reproduce", "run a verification suite");
    std::string suite, data_path;
    bool long_ok = false;
    reproduce->add_option("--suite", suite, "table1|table2|figures|census32|census40|external")
        ->required();
    reproduce->add_option("--data", data_path, "external 16x16 matrix list");
    reproduce->add_flag("--long", long_ok, "allow runs expected to exceed a few minutes");
    reproduce->add_option("--workers", workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(path, as_json);
        if (*residue) return cmd_residue(path, as_json);
        if (*wenum) {
            std::string kind = "euclidean";
            if (w_bin) kind = "binary";
            else if (w_ham) kind = "hamming";
            else if (w_lee) kind = "lee";
            else if (w_euc) kind = "euclidean";
            return cmd_wenum(path, kind, as_json);
        }
        if (*construct)
            return cmd_construct(residue_spec, mode, seed, limit, workers, emit_dir, free_mode,
                                 as_json);
        if (*extend) return cmd_extend(code_spec, support_csv, seed, workers, out_path, as_json);
        if (*reproduce) return cmd_reproduce(suite, data_path, long_ok, workers, as_json);
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const guard_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
