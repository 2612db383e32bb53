// Copyright 2026 The kuni Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kuni/cli/app.h"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "kuni/constructions.h"
#include "kuni/decomposition.h"
#include "kuni/error.h"
#include "kuni/limits.h"
#include "kuni/matrix.h"
#include "kuni/parallel.h"
#include "kuni/singleton.h"
#include "kuni/verify.h"

#ifndef KUNI_VERSION
#define KUNI_VERSION "0.0.0"
#endif

namespace kuni::cli {

using Json = nlohmann::ordered_json;

namespace {

struct IoError {
    int code;
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError{kExitNoInput, "cannot open " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw IoError{kExitCantCreate, "cannot write " + path};
    }
}

FieldPtr field_of(uint64_t q) {
    if (q < 2 || q > kMaxFieldOrder || !prime_power(q)) {
        throw Error(ErrorKind::UnsupportedSize, "q = " + std::to_string(q) + " is not a supported prime power");
    }
    return make_field_of_order(q);
}

std::string join(const std::vector<size_t> &v, const char *sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? sep : "") + std::to_string(v[i]);
    }
    return s;
}

std::string word_text(std::span<const uint32_t> word, uint32_t q) {
    std::string s;
    for (size_t i = 0; i < word.size(); i++) {
        if (q > 10 && i > 0) {
            s += '.';
        }
        s += std::to_string(word[i]);
    }
    return s;
}

// Reproducibility record embedded in every JSON report.
class Manifest {
   public:
    explicit Manifest(const std::vector<std::string> &args) {
        for (size_t i = 1; i < args.size(); i++) {
            command_.push_back(args[i]);
        }
    }
    void seed(const std::string &name, uint64_t value) {
        seeds_[name] = value;
    }
    void input(const std::string &path) {
        inputs_.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    }
    Json json() const {
        Json caps = {{"max_terms", max_terms()},
                     {"hard_max_terms", kHardMaxTerms},
                     {"max_reduced_dim", kMaxReducedDim},
                     {"max_codewords", kMaxCodewords},
                     {"max_determinants", kMaxDeterminants},
                     {"threads", default_threads()}};
        return {{"tool", "kuni"},     {"version", KUNI_VERSION}, {"command", command_},
                {"seeds", seeds_},    {"caps", caps},            {"inputs", inputs_}};
    }

   private:
    Json command_ = Json::array();
    Json seeds_ = Json::object();
    Json inputs_ = Json::array();
};

void emit_json(const std::string &path, const Manifest &manifest, Json body, std::ostream &out) {
    if (path.empty()) {
        return;
    }
    Json doc = {{"manifest", manifest.json()}};
    for (auto &[key, value] : body.items()) {
        doc[key] = value;
    }
    write_file(path, doc.dump(2) + "\n", out);
}

SparseState read_state_file(const std::string &path, Manifest &manifest) {
    std::string text = read_file(path);
    manifest.input(path);
    return parse_state(text);
}

FFMatrix read_matrix_file(const std::string &path, Manifest &manifest) {
    std::string text = read_file(path);
    manifest.input(path);
    return parse_matrix(text);
}

void describe_state(std::ostream &os, const std::string &what, const SparseState &s) {
    os << what << ": n=" << s.n() << " q=" << s.q() << " support=" << s.support() << "\n";
}

// Options shared by the builtin constructors.
struct BuiltinArgs {
    std::string name;
    uint32_t q = 0;
    size_t n = 0;
    uint32_t l = 0;
    uint32_t m = 0;

    void attach(CLI::App *app, bool required) {
        auto *opt = app->add_option("--builtin,--name", name, "Builtin name")->check(CLI::IsMember(builtin_names()));
        if (required) {
            opt->required();
        }
        app->add_option("--q", q, "Field order (ame_5_q, ghz, bell)");
        app->add_option("--n", n, "Party count (ghz)");
        app->add_option("--l", l, "X exponent (bell)");
        app->add_option("--m", m, "Z exponent (bell)");
    }
    BuiltinRequest request() const {
        return {name, q, n, l, m};
    }
};

Json mixedness_json(const MixednessResult &m) {
    const char *kind = m.violation == MixednessViolation::OffDiagonal ? "off-diagonal"
                       : m.violation == MixednessViolation::Diagonal  ? "diagonal"
                                                                      : "none";
    return {{"violation", kind}, {"row", m.row}, {"col", m.col}};
}

Json tally_json(const CaseTally &t) {
    return {{"checked", t.checked}, {"passed", t.passed}};
}

Json uniformity_json(const UniformityReport &r, size_t target) {
    Json sizes = Json::array();
    for (const SizeTally &t : r.sizes) {
        Json entry = {{"size", t.size}, {"total_subsets", t.total_subsets}, {"checked", t.checked}, {"passed", t.passed}};
        if (r.classical_sites) {
            entry["cases"] = {{"classical", tally_json(t.classical)},
                              {"quantum", tally_json(t.quantum)},
                              {"split", tally_json(t.split)}};
        }
        sizes.push_back(entry);
    }
    Json j = {{"n", r.n},
              {"q", r.q},
              {"target_k", target},
              {"mode", r.certifying() ? "exhaustive" : "sampled"},
              {"max_verified_k", r.max_verified_k},
              {"sizes", sizes}};
    if (!r.certifying()) {
        j["seed"] = r.seed;
        j["sample_count"] = r.sample_count;
    }
    if (r.classical_sites) {
        j["classical_sites"] = *r.classical_sites;
    }
    if (r.first_failure) {
        j["first_failure"] = *r.first_failure;
        j["failure_witness"] = mixedness_json(r.failure_witness);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json check_json(const DecompositionCheck &c) {
    return {{"name", c.name}, {"passed", c.passed}, {"checks", c.checks}, {"witness", c.witness}, {"detail", c.detail}};
}

Json decomposition_json(const DecompositionReport &r) {
    Json checks = Json::array();
    for (const DecompositionCheck *c : r.checks()) {
        checks.push_back(check_json(*c));
    }
    return {{"n", r.n}, {"k", r.k}, {"q", r.q}, {"certified", r.certified()}, {"checks", checks}};
}

void print_decomposition(std::ostream &out, const DecompositionReport &r) {
    out << "G: [" << r.n << "," << r.k << "]_" << r.q << "\n";
    for (const DecompositionCheck *c : r.checks()) {
        out << "  " << std::left << std::setw(12) << c->name << (c->passed ? "pass" : "FAIL") << "  checks=" << c->checks;
        if (!c->witness.empty()) {
            out << " witness={" << join(c->witness) << "}";
        }
        if (!c->detail.empty()) {
            out << "  " << c->detail;
        }
        out << "\n";
    }
}

// G and Q from --q (construct_G_Q), --q/--n (shorter length), or files.
struct PairArgs {
    uint32_t q = 0;
    size_t n = 0;
    std::string g_path;
    std::string q_path;
    std::string builtin;

    void attach(CLI::App *app) {
        app->add_option("--q", q, "Build G and Q over GF(q)");
        app->add_option("--n", n, "Classical length n <= q (with --q)");
        app->add_option("--g", g_path, "Generator matrix file");
        app->add_option("--qmat", q_path, "Q matrix file");
        app->add_option("--builtin", builtin, "ame_19_17_matrices or ame_21_19_matrices")
            ->check(CLI::IsMember({"ame_19_17_matrices", "ame_21_19_matrices"}));
    }
    bool has_files() const {
        return !g_path.empty();
    }
    GQPair load(Manifest &manifest) const {
        if (!builtin.empty()) {
            return builtin == "ame_19_17_matrices" ? ame_19_17_matrices() : ame_21_19_matrices();
        }
        if (!g_path.empty()) {
            if (q_path.empty()) {
                throw CLI::RequiredError("--qmat");
            }
            FFMatrix g = read_matrix_file(g_path, manifest);
            return {g, QMatrix(read_matrix_file(q_path, manifest))};
        }
        if (q == 0) {
            throw CLI::RequiredError("--q, --g or --builtin");
        }
        FieldPtr f = field_of(q);
        return n == 0 || n == q ? construct_G_Q(f) : construct_G_Q_for_length(f, n);
    }
};

}  // namespace

std::string sha256_file(const std::string &path) {
    std::string data = read_file(path);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; i++) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

LinearCode load_code(const std::string &spec) {
    static const std::regex shape(R"(\[(\d+),(\d+)\]_?q?(\d+))");
    std::smatch match;
    if (std::regex_match(spec, match, shape)) {
        size_t n = std::stoul(match[1]);
        size_t k = std::stoul(match[2]);
        return mds_code(n, k, field_of(std::stoull(match[3])));
    }
    std::string text = read_file(spec);
    if (text.rfind("CODE", 0) == 0) {
        return parse_code(text);
    }
    return code_from_generator(parse_matrix(text));
}

SparseState load_seed(const std::string &spec, const FieldPtr &field, size_t parties) {
    if (spec == "bell") {
        return ghz_state(field, 2);
    }
    if (spec == "ghz") {
        return ghz_state(field, parties);
    }
    if (spec == "ame4") {
        return state_from_code(mds_code(4, 2, field));
    }
    if (spec == "ame5") {
        return ame_5_q(field);
    }
    return parse_state(read_file(spec));
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact constructions and certificates for k-uniform and AME states"};
    app.name(args.empty() ? "kuni" : std::filesystem::path(args[0]).filename().string());
    app.require_subcommand(1);
    app.set_version_flag("--version", KUNI_VERSION);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    // construct
    auto *construct = app.add_subcommand("construct", "Build a state and write it in the STATE format");
    construct->require_subcommand(1);
    std::string state_out = "-";
    std::string matrices_dir = ".";
    std::string code_spec;
    std::string seed_spec = "bell";
    bool dual = false;
    BuiltinArgs builtin;
    PairArgs rep_pair;

    auto *from_code = construct->add_subcommand("from-code", "Uniform superposition of the codewords");
    from_code->add_option("--code", code_spec, "[n,k]qQ or a code file")->required();
    auto *clq = construct->add_subcommand("clq", "Classical code combined with a Weyl basis of a seed state");
    clq->add_option("--code", code_spec, "[n,k]qQ or a code file")->required();
    clq->add_option("--seed", seed_spec, "bell, ghz, ame4, ame5 or a STATE file");
    clq->add_flag("--dual", dual, "Use the dual-code variant");
    auto *clq_rep = construct->add_subcommand("clq-rep", "Coset decomposition combined with Bell states");
    rep_pair.attach(clq_rep);
    auto *build = construct->add_subcommand("builtin", "Named states and matrix pairs");
    builtin.attach(build, true);
    build->add_option("--out-dir", matrices_dir, "Directory for g.txt and q.txt");
    for (CLI::App *sub : {from_code, clq, clq_rep, build}) {
        sub->add_option("--out,-o", state_out, "Output STATE file (- for stdout)");
    }

    // verify
    auto *verify = app.add_subcommand("verify", "Exact k-uniformity sweep");
    std::string state_path;
    BuiltinArgs verify_builtin;
    std::optional<size_t> target_k;
    bool sampled = false;
    uint64_t samples = 16;
    uint64_t seed = 0;
    std::optional<size_t> classical_sites;
    bool census = false;
    bool slocc = false;
    std::vector<size_t> subset;
    std::string json_path;
    auto *state_opt = verify->add_option("--state", state_path, "STATE file");
    verify_builtin.attach(verify, false);
    verify->get_option("--builtin")->excludes(state_opt);
    verify->add_option("--k", target_k, "Target uniformity (default floor(n/2))");
    verify->add_flag("--sampled", sampled, "Check seeded random subsets instead of all");
    verify->add_option("--samples", samples, "Subsets per size in sampled mode");
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_option("--classical-sites", classical_sites, "Leading sites forming the classical part");
    verify->add_flag("--census", census, "Report minimal-support status");
    verify->add_flag("--slocc", slocc, "Search for a maximally mixed size-(k+1) reduction");
    verify->add_option("--subset", subset, "Print the reduced state on these sites")->delimiter(',');
    verify->add_option("--json", json_path, "JSON report path (- for stdout)");

    // certify
    auto *certify = app.add_subcommand("certify", "Code-theoretic AME certificate for the repetition construction");
    PairArgs certify_pair;
    certify_pair.attach(certify);
    certify->add_option("--json", json_path, "JSON report path (- for stdout)");

    // decompose
    auto *decompose = app.add_subcommand("decompose", "Split an MDS code into q^2 MDS cosets");
    PairArgs decompose_pair;
    decompose_pair.attach(decompose);
    bool search = false;
    bool randomized = false;
    uint64_t budget = 1'000'000;
    bool table = false;
    decompose->add_flag("--search", search, "Search for Q instead of reading it");
    decompose->add_flag("--randomized", randomized, "Randomized search order");
    decompose->add_option("--budget", budget, "Rank-2 candidates to try");
    decompose->add_option("--seed", seed, "Search seed");
    decompose->add_flag("--table", table, "List every coset explicitly");
    decompose->add_option("--out-dir", matrices_dir, "Write g.txt and q.txt here");
    decompose->add_option("--json", json_path, "JSON report path (- for stdout)");

    // codes
    auto *codes = app.add_subcommand("codes", "Linear code utilities");
    codes->require_subcommand(1);
    size_t code_n = 0;
    size_t code_k = 0;
    uint64_t code_q = 0;
    std::string method = "all";
    auto *codes_mds = codes->add_subcommand("mds", "Write an MDS code");
    auto *codes_exists = codes->add_subcommand("exists", "Whether an MDS code is known to exist");
    for (CLI::App *sub : {codes_mds, codes_exists}) {
        sub->add_option("--n", code_n)->required();
        sub->add_option("--k", code_k)->required();
        sub->add_option("--q", code_q)->required();
    }
    codes_mds->add_option("--out,-o", state_out, "Output code file (- for stdout)");
    auto *codes_check = codes->add_subcommand("check", "Certify the MDS property");
    codes_check->add_option("--code", code_spec, "[n,k]qQ or a code file")->required();
    codes_check->add_option("--method", method, "columns, submatrix, distance or all")
        ->check(CLI::IsMember({"columns", "submatrix", "distance", "all"}));

    // table1
    auto *table1 = app.add_subcommand("table1", "Reproduce the Cl+Q versus MDS comparison table");
    Table1Options t1;
    table1->add_option("--n-min", t1.n_min);
    table1->add_option("--n-max", t1.n_max);
    table1->add_option("--samples", t1.samples, "Subsets per size for sampled rows");
    table1->add_option("--seed", t1.seed, "Sampling seed");
    table1->add_option("--exhaustive-budget", t1.exhaustive_budget, "Support times subsets below which rows are exhaustive");
    table1->add_option("--json", json_path, "JSON report path (- for stdout)");

    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    if (argv.empty()) {
        argv.push_back("kuni");
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    set_default_threads(threads);
    Manifest manifest(args);
    try {
        if (construct->parsed()) {
            std::ostream &info = state_out == "-" ? err : out;
            std::optional<SparseState> state = [&]() -> std::optional<SparseState> {
                if (from_code->parsed()) {
                    LinearCode code = load_code(code_spec);
                    return state_from_code(code);
                }
                if (clq->parsed()) {
                    LinearCode code = load_code(code_spec);
                    SparseState s = load_seed(seed_spec, code.spec(), code.k());
                    return cl_plus_q(code, s, dual ? ClqVariant::Dual : ClqVariant::Direct);
                }
                if (clq_rep->parsed()) {
                    GQPair pair = rep_pair.load(manifest);
                    return cl_plus_q_repetition(pair.g, pair.q);
                }
                auto built = builtin_state(builtin.request());
                if (auto *pair = std::get_if<GQPair>(&built)) {
                    std::filesystem::path dir(matrices_dir);
                    std::filesystem::create_directories(dir);
                    write_file((dir / "g.txt").string(), format_matrix(pair->g), out);
                    write_file((dir / "q.txt").string(), format_matrix(pair->q.matrix()), out);
                    out << "wrote " << (dir / "g.txt").string() << " (" << pair->g.rows() << "x" << pair->g.cols()
                        << ") and " << (dir / "q.txt").string() << " (" << pair->q.matrix().rows() << "x2)\n";
                    return std::nullopt;
                }
                return std::get<SparseState>(std::move(built));
            }();
            if (state) {
                write_file(state_out, format_state(*state), out);
                describe_state(info, "constructed", *state);
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            SparseState state = [&]() -> SparseState {
                if (!state_path.empty()) {
                    return read_state_file(state_path, manifest);
                }
                if (verify_builtin.name.empty()) {
                    throw CLI::RequiredError("--state or --builtin");
                }
                auto built = builtin_state(verify_builtin.request());
                if (!std::holds_alternative<SparseState>(built)) {
                    throw Error(ErrorKind::UnknownName, verify_builtin.name + " is a matrix pair; use certify");
                }
                return std::get<SparseState>(std::move(built));
            }();
            std::ostream &human = json_path == "-" ? err : out;
            describe_state(human, "state", state);
            Json body;
            if (!subset.empty()) {
                ReducedDensity rho = reduced_density(state, subset);
                human << "reduced state on {" << join(subset) << "}: dim=" << rho.dim() << "\n";
                Json entries = Json::array();
                for (const auto &e : rho.entries()) {
                    Cyclotomic c(state.order(), e.coeffs);
                    human << "  (" << e.row << "," << e.col << ") " << c.to_string() << "\n";
                    entries.push_back({{"row", e.row}, {"col", e.col}, {"coeffs", e.coeffs}});
                }
                MixednessResult mm = is_maximally_mixed(rho);
                human << "  maximally mixed: " << (mm.maximally_mixed ? "yes" : "no") << "\n";
                body["reduced"] = {{"subset", subset}, {"dim", rho.dim()}, {"entries", entries},
                                   {"maximally_mixed", mm.maximally_mixed}, {"witness", mixedness_json(mm)}};
            }
            size_t target = target_k.value_or(state.n() / 2);
            UniformityOptions opts;
            opts.k_max = target;
            opts.sampled = sampled;
            opts.classical_sites = classical_sites;
            if (sampled) {
                opts.sample_count = samples;
                opts.seed = seed;
                manifest.seed("sampling", seed);
            }
            UniformityReport report = uniformity(state, opts);
            for (const SizeTally &t : report.sizes) {
                human << "size " << t.size << ": " << t.passed << "/" << t.checked << " maximally mixed";
                if (t.checked != t.total_subsets) {
                    human << " (of " << t.total_subsets << " subsets)";
                }
                if (classical_sites) {
                    human << "  classical " << t.classical.passed << "/" << t.classical.checked << ", quantum "
                          << t.quantum.passed << "/" << t.quantum.checked << ", split " << t.split.passed << "/"
                          << t.split.checked;
                }
                human << "\n";
            }
            int code;
            std::string verdict;
            if (report.max_verified_k < target) {
                code = kExitRefuted;
                verdict = "refuted";
                human << "result: not " << target << "-uniform; first failing subset {"
                      << join(*report.first_failure) << "}\n";
            } else if (report.certifying()) {
                code = kExitOk;
                verdict = "certified";
                human << "result: " << target << "-uniform (exhaustive, certified)\n";
            } else {
                code = kExitSampled;
                verdict = "sampled-pass";
                human << "result: " << target << "-uniform on sampled subsets (non-certifying)\n";
            }
            body["uniformity"] = uniformity_json(report, target);
            body["verdict"] = verdict;
            if (census && code == kExitOk) {
                SupportCensus c = support_census(state, target);
                human << "support " << c.support << " vs q^k = " << checked_pow(state.q(), target) << ": "
                      << (c.is_minimal ? "minimal" : "non-minimal") << "\n";
                body["census"] = {{"support", c.support}, {"minimal", c.is_minimal}};
            }
            if (slocc) {
                auto w = slocc_witness(state, target, classical_sites);
                if (w) {
                    human << "slocc witness: {" << join(*w) << "} maximally mixed\n";
                    body["slocc_witness"] = *w;
                } else {
                    human << "slocc witness: not found\n";
                    body["slocc_witness"] = nullptr;
                }
            }
            emit_json(json_path, manifest, body, out);
            return code;
        }

        if (certify->parsed()) {
            GQPair pair = certify_pair.load(manifest);
            CertificateReport cert = certify_ame_via_codes(pair.g, pair.q);
            std::ostream &human = json_path == "-" ? err : out;
            print_decomposition(human, cert.decomposition);
            human << (cert.ame ? "certified " + cert.claim() : std::string("not certified")) << "\n";
            emit_json(json_path, manifest,
                      {{"parties", cert.parties},
                       {"q", cert.q},
                       {"ame", cert.ame},
                       {"claim", cert.claim()},
                       {"decomposition", decomposition_json(cert.decomposition)}},
                      out);
            return cert.ame ? kExitOk : kExitRefuted;
        }

        if (decompose->parsed()) {
            std::ostream &human = json_path == "-" ? err : out;
            GQPair pair = [&]() -> GQPair {
                if (!search) {
                    return decompose_pair.load(manifest);
                }
                FFMatrix g = decompose_pair.has_files() ? read_matrix_file(decompose_pair.g_path, manifest)
                             : decompose_pair.q != 0
                                 ? mds_code(decompose_pair.n ? decompose_pair.n : decompose_pair.q,
                                            ((decompose_pair.n ? decompose_pair.n : decompose_pair.q) + 1) / 2,
                                            field_of(decompose_pair.q))
                                       .generator()
                                 : throw CLI::RequiredError("--g or --q");
                manifest.seed("search", seed);
                SearchResult found = search_Q(g, budget, randomized ? SearchMode::Randomized : SearchMode::Exhaustive, seed);
                human << "search: " << found.attempts << " rank-2 candidates tried\n";
                if (!found.q) {
                    throw IoError{kExitRefuted, "no Q found within budget " + std::to_string(budget)};
                }
                return {g, *found.q};
            }();
            DecompositionReport report = verify_decomposition(pair.g, pair.q);
            print_decomposition(human, report);
            Json body = {{"g", format_matrix(pair.g)}, {"q_matrix", format_matrix(pair.q.matrix())},
                         {"report", decomposition_json(report)}};
            if (decompose->count("--out-dir")) {
                std::filesystem::path dir(matrices_dir);
                std::filesystem::create_directories(dir);
                write_file((dir / "g.txt").string(), format_matrix(pair.g), out);
                write_file((dir / "q.txt").string(), format_matrix(pair.q.matrix()), out);
            }
            if (report.certified()) {
                CosetDecomposition parts =
                    coset_partition(pair.g, pair.q, table ? PartitionMode::Explicit : PartitionMode::Implicit);
                uint32_t q = pair.g.spec()->q();
                Json cosets = Json::array();
                for (uint32_t a = 0; a < q; a++) {
                    for (uint32_t b = 0; b < q; b++) {
                        std::vector<uint32_t> rep = parts.representative(a, b);
                        human << "(" << a << "," << b << ") " << word_text(rep, q);
                        Json entry = {{"alpha", a}, {"beta", b}, {"representative", rep}};
                        if (table) {
                            Json words = Json::array();
                            human << ":";
                            for (const auto &w : parts.coset(a, b)) {
                                human << " " << word_text(w, q);
                                words.push_back(w);
                            }
                            entry["codewords"] = words;
                        }
                        human << "\n";
                        cosets.push_back(entry);
                    }
                }
                body["cosets"] = cosets;
            }
            emit_json(json_path, manifest, body, out);
            return report.certified() ? kExitOk : kExitRefuted;
        }

        if (codes_mds->parsed()) {
            write_file(state_out, format_code(mds_code(code_n, code_k, field_of(code_q))), out);
            return kExitOk;
        }
        if (codes_exists->parsed()) {
            bool exists = mds_exists(code_n, code_k, code_q);
            out << "[" << code_n << "," << code_k << "]_" << code_q << ": " << (exists ? "exists" : "unknown") << "\n";
            return exists ? kExitOk : kExitRefuted;
        }
        if (codes_check->parsed()) {
            LinearCode code = load_code(code_spec);
            std::vector<MdsMethod> methods;
            if (method == "all" || method == "columns") {
                methods.push_back(MdsMethod::Columns);
            }
            if (method == "all" || method == "submatrix") {
                methods.push_back(MdsMethod::Submatrix);
            }
            if (method == "all" || method == "distance") {
                methods.push_back(MdsMethod::Distance);
            }
            out << "[" << code.n() << "," << code.k() << "]_" << code.q() << "\n";
            std::optional<bool> verdict;
            bool agree = true;
            for (MdsMethod m : methods) {
                MdsCertificate cert = is_mds(code, m);
                out << "  " << std::left << std::setw(10) << mds_method_name(m) << (cert.is_mds ? "MDS" : "not MDS")
                    << "  checks=" << cert.checks;
                if (cert.distance) {
                    out << " d=" << *cert.distance;
                }
                if (!cert.witness_columns.empty()) {
                    out << " witness={" << join(cert.witness_columns) << "}";
                }
                out << "\n";
                if (verdict && *verdict != cert.is_mds) {
                    agree = false;
                }
                verdict = cert.is_mds;
            }
            if (!agree) {
                throw Error(ErrorKind::CertificationFailed, "MDS methods disagree");
            }
            return verdict.value_or(false) ? kExitOk : kExitRefuted;
        }

        if (table1->parsed()) {
            manifest.seed("sampling", t1.seed);
            std::vector<Table1Result> rows = run_table1(t1);
            std::ostream &human = json_path == "-" ? err : out;
            human << " k   n  Cl        seed   Cl+Q q  status        support   MDS q (table)  MDS q (ours)\n";
            Json list = Json::array();
            int code = kExitOk;
            for (const Table1Result &r : rows) {
                std::string cl = "[" + std::to_string(r.row.n_cl) + "," + std::to_string(r.row.k_cl) + "]";
                human << std::right << std::setw(2) << r.row.k << std::setw(4) << r.row.n << "  " << std::left
                      << std::setw(10) << cl << std::setw(7) << r.row.seed << std::right << std::setw(6)
                      << r.row.clq_q << "  " << std::left << std::setw(13) << row_status_name(r.status)
                      << std::right << std::setw(8) << r.support << std::setw(16) << r.row.table_mds_q
                      << std::setw(14) << r.mds_q << (r.mds_q != r.row.table_mds_q ? "  differs" : "") << "\n";
                if (r.status != RowStatus::Certified) {
                    human << "      " << r.detail << "\n";
                }
                list.push_back({{"k", r.row.k},
                                {"n", r.row.n},
                                {"classical", cl},
                                {"seed", r.row.seed},
                                {"clq_q", r.row.clq_q},
                                {"status", row_status_name(r.status)},
                                {"support", r.support},
                                {"verified_k", r.verified_k},
                                {"detail", r.detail},
                                {"mds_q_table", r.row.table_mds_q},
                                {"mds_q", r.mds_q}});
                if (r.status == RowStatus::Refuted) {
                    code = kExitRefuted;
                } else if (r.status == RowStatus::SampledPass && code == kExitOk) {
                    code = kExitSampled;
                }
            }
            emit_json(json_path, manifest, {{"rows", list}}, out);
            return code;
        }
    } catch (const IoError &e) {
        if (!e.message.empty()) {
            err << "kuni: " << e.message << "\n";
        }
        return e.code;
    } catch (const CLI::Error &e) {
        err << "kuni: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "kuni: " << e.what() << "\n";
        return kExitModule;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "kuni: " << e.what() << "\n";
        return kExitCantCreate;
    }
    return kExitUsage;
}

}  // namespace kuni::cli
