// algnorm: command-line front end for the algebra-norm library.
//
// Exit codes: 0 success, 1 check violation, 2 input error, 3 precondition not
// satisfied (e.g. the codimension is finite where a witness needs it infinite).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "algnorm/analysis.hpp"
#include "algnorm/gallery.hpp"
#include "algnorm/io.hpp"
#include "algnorm/verify.hpp"

using namespace algnorm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr std::uint64_t kFallbackSeed = 42;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::FiniteCodimension:
        case ErrorKind::InfiniteCodimension:
        case ErrorKind::EmptyComplement:
        case ErrorKind::BoundedFunctional:
            return kExitPrecondition;
        case ErrorKind::InternalInconsistency:
            return kExitViolation;
        default:
            return kExitInput;
    }
}

struct Output {
    std::string format = "table";
    bool with_float = false;

    bool json() const { return format == "json"; }
    RenderOptions render() const { return {with_float}; }

    std::string value(const Rational& r) const {
        if (!with_float) return r.to_string();
        std::ostringstream s;
        s << r.to_string() << " (" << r.to_double() << ")";
        return s.str();
    }
    std::string value(const Magnitude& m) const {
        if (m.exact) return value(*m.exact);
        return m.to_string();
    }
    std::string value(const GaussianRational& z) const {
        if (!with_float || !z.is_real()) return z.to_string();
        return value(z.re());
    }
};

void add_output_flags(CLI::App* cmd, Output& out, std::vector<std::string> formats = {"table", "json"}) {
    cmd->add_option("--format", out.format, "output rendering")->check(CLI::IsMember(formats));
    cmd->add_flag("--float", out.with_float, "add decimal approximations to exact values");
}

std::uint64_t default_seed() {
    const char* env = std::getenv("ALGNORM_SEED");
    if (env == nullptr || *env == '\0') return kFallbackSeed;
    try {
        std::size_t used = 0;
        const std::string text(env);
        const auto seed = std::stoull(text, &used);
        if (used == text.size() && text[0] != '-') return seed;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::FlagError, std::string("ALGNORM_SEED is not an unsigned integer: ") + env);
}

FunctionalSpec parse_functional(const std::string& text, const AlgebraSpec& algebra) {
    auto enumeration = ComplementEnumeration::build(algebra);
    if (text == "theorem") return FunctionalSpec::theorem(std::move(enumeration));
    constexpr std::string_view prefix = "corollary:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        std::size_t used = 0;
        Index n = 0;
        try {
            n = std::stoull(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == digits.size() && !digits.empty() && digits[0] != '-' && n >= 1) {
            return FunctionalSpec::corollary(std::move(enumeration), n);
        }
    }
    throw Error(ErrorKind::FlagError, "functional must be \"theorem\" or \"corollary:<n>\" with n >= 1, got \"" +
                                          text + "\"");
}

BaseNormTag parse_base(const std::string& text) {
    if (auto tag = parse_base_norm(text)) return *tag;
    throw Error(ErrorKind::FlagError, "unknown base norm \"" + text + "\" (l1, l2, sup)");
}

void print_analysis(const AnalysisReport& r, const Output& out) {
    const AlgebraSpec& a = r.algebra;
    std::cout << "algebra: " << a.describe() << "\n";
    if (const auto d = a.dimension()) {
        std::cout << "dimension: " << *d << "\n";
    } else {
        std::cout << "dimension: countably infinite\n";
    }
    if (const auto adj = a.adjoined_indices(); !adj.empty()) {
        std::cout << "adjoined:";
        for (Index u : adj) std::cout << " " << a.basis_label(u);
        std::cout << "\n";
    }
    std::cout << "associativity: " << r.validation.triples_checked << " basis triples"
              << (r.validation.exhaustive ? " (exhaustive)" : " (spot checks)") << "\n";
    std::cout << "A^2: " << r.square_span << "\n";
    std::cout << "codim = " << r.codimension.to_string() << "\n";
    if (r.quotient_basis) {
        std::cout << "quotient basis:";
        if (r.quotient_basis->empty()) std::cout << " (empty)";
        for (const auto& e : *r.quotient_basis) std::cout << " " << a.render(e);
        std::cout << "\n";
    }
    if (r.identity) {
        std::cout << "identity: " << a.render(r.identity->element) << " (" << to_string(r.identity->side) << ")\n";
    } else {
        std::cout << "identity: none\n";
    }
    std::cout << "unital => A^2 = A: " << to_string(r.proposition.outcome);
    if (!r.proposition.detail.empty()) std::cout << " (" << r.proposition.detail << ")";
    std::cout << "\n";
    std::cout << "DSAP: " << (r.dsap ? "yes" : "no");
    if (r.certificate) {
        if (r.certificate->unbounded()) {
            std::cout << " (theorem functional unbounded on norm-one basis vectors:";
            for (const auto& w : r.certificate->witnesses) {
                std::cout << " phi(" << a.basis_label(w.index) << ") = " << out.value(w.phi_value) << ";";
            }
            std::cout << " ...)";
        } else if (r.certificate->sup) {
            std::cout << " (theorem functional bounded, sup |phi(e_k)| = " << out.value(*r.certificate->sup) << ")";
        }
    } else {
        std::cout << " (A^2 = A, only the zero functional vanishes on A^2)";
    }
    std::cout << "\n";
}

void print_witness_table(const WitnessReport& w, const Output& out) {
    std::cout << w.lhs << " vs " << w.rhs << " (" << to_string(w.base) << " base)\n";
    std::cout << "k\twitness\t" << w.lhs << "\t" << w.rhs << "\tratio\n";
    for (const auto& r : w.rows) {
        std::cout << r.k << "\t" << r.witness_index << "\t" << out.value(r.p_m) << "\t" << out.value(r.p_n) << "\t"
                  << out.value(r.ratio) << "\n";
    }
    std::cout << (w.certifies_unbounded ? "certified: no C with " + w.lhs + " <= C * " + w.rhs
                                        : "not certified")
              << "\n";
}

void print_check(const CheckReport& c) {
    std::cout << (c.pass() ? "PASS " : "FAIL ") << c.name << "  " << c.algebra << "  " << c.subject
              << "  trials=" << c.trials << " exact=" << c.exact_comparisons
              << " approx=" << c.approximate_comparisons << " violations=" << c.violation_count << "\n";
    for (const auto& v : c.violations) {
        std::cout << "    " << v.relation << " fails at " << v.inputs << ": " << v.observed << "\n";
    }
    for (const auto& w : c.warnings) std::cout << "    warning: " << w << "\n";
}

int print_suite(const SuiteReport& suite, const Output& out) {
    if (out.json()) {
        std::cout << to_json(suite).dump(2) << "\n";
    } else {
        for (const auto& c : suite.checks) print_check(c);
        for (const auto& w : suite.warnings) std::cout << "warning: " << w << "\n";
        std::cout << "suite: " << (suite.pass() ? "pass" : "fail") << " (" << suite.checks.size() << " checks, "
                  << suite.violation_count() << " violations)\n";
        if (suite.negative_control) {
            std::cout << "negative control: "
                      << (suite.control_detected ? "violation detected (expected failure)"
                                                 : "no violation found: the harness is vacuous")
                      << "\n";
        }
    }
    return suite.pass() ? kExitOk : kExitViolation;
}

void print_entry_line(const GalleryEntry& e) {
    std::cout << e.id << "\t" << (e.algebra ? "computable" : "symbolic") << "\tcodim "
              << e.expected_codimension.to_string() << "\tDSAP " << (e.expected_dsap ? "yes" : "no") << "\t"
              << e.title << "\n";
}

void print_gallery_run(const GalleryRun& run, const Output& out) {
    std::cout << "entry: " << run.entry.id << " (" << run.entry.title << ")\n";
    print_analysis(run.analysis, out);
    std::cout << "expected: codim = " << run.entry.expected_codimension.to_string()
              << ", DSAP: " << (run.entry.expected_dsap ? "yes" : "no") << " -> "
              << (run.mismatches.empty() ? "reproduced" : "MISMATCH") << "\n";
    for (const auto& m : run.mismatches) std::cout << "  " << m << "\n";
    for (const auto& n : run.entry.notes) std::cout << "note: " << n << "\n";
    if (!run.witness_matrix.empty()) {
        std::cout << "pairwise witnesses p_m vs p_n (ratio at k = " << kGalleryWitnessRows
                  << "; * = certified unbounded):\n";
        std::cout << "m\\n";
        for (Index n = 1; n <= kGalleryMatrixSize; ++n) std::cout << "\t" << n;
        std::cout << "\n";
        std::size_t i = 0;
        for (Index m = 1; m <= kGalleryMatrixSize; ++m) {
            std::cout << m;
            for (Index n = 1; n <= kGalleryMatrixSize; ++n) {
                if (m == n) {
                    std::cout << "\t-";
                    continue;
                }
                const auto& w = run.witness_matrix[i++];
                std::cout << "\t" << out.value(w.rows.back().ratio) << (w.certifies_unbounded ? "*" : "");
            }
            std::cout << "\n";
        }
    }
    if (run.base_vs_p) print_witness_table(*run.base_vs_p, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of A^2, functionals vanishing on it, and the algebra norms they induce"};
    app.require_subcommand(1);

    Output out;
    std::string spec_path;

    auto* analyze_cmd = app.add_subcommand("analyze", "report A^2, its codimension, identity and DSAP");
    analyze_cmd->add_option("spec", spec_path, "algebra spec file (JSON)")->required();
    add_output_flags(analyze_cmd, out);

    std::string functional_text;
    std::string base_text = "l1";
    std::vector<std::string> eval_paths;
    std::vector<Index> basis_indices;
    auto* norms_cmd = app.add_subcommand("norms", "evaluate base norm, phi and p on elements");
    norms_cmd->add_option("spec", spec_path, "algebra spec file (JSON)")->required();
    norms_cmd->add_option("--functional", functional_text, "theorem | corollary:<n>")->required();
    norms_cmd->add_option("--base", base_text, "base norm: l1, l2 or sup");
    norms_cmd->add_option("--eval", eval_paths, "element file (JSON); repeatable");
    norms_cmd->add_option("--basis", basis_indices, "evaluate the canonical basis vector e_k; repeatable");
    add_output_flags(norms_cmd, out);

    Index m = 0;
    Index n = 0;
    Index k_max = 10;
    auto* witness_cmd = app.add_subcommand("witness", "witness table certifying p_m and p_n inequivalent");
    witness_cmd->add_option("spec", spec_path, "algebra spec file (JSON)")->required();
    witness_cmd->add_option("--m", m, "left-hand corollary functional index")->required();
    witness_cmd->add_option("--n", n, "right-hand corollary functional index")->required();
    witness_cmd->add_option("--k-max", k_max, "last row (rows run k = 2..k-max)");
    witness_cmd->add_option("--base", base_text, "base norm: l1, l2 or sup");
    add_output_flags(witness_cmd, out, {"csv", "json", "table"});

    std::uint64_t trials = 1000;
    std::optional<std::uint64_t> seed;
    bool negative = false;
    std::vector<std::string> bases{"l1"};
    Index corollaries = 3;
    auto* check_cmd = app.add_subcommand("check", "run the property checks (whole gallery without a spec)");
    check_cmd->add_option("spec", spec_path, "algebra spec file (JSON)");
    check_cmd->add_option("--trials", trials, "sampled pairs per check");
    check_cmd->add_option("--seed", seed, "sampler seed (default: $ALGNORM_SEED or 42)");
    check_cmd->add_flag("--negative-control", negative, "also run the deliberately broken norm, which must fail");
    check_cmd->add_option("--base", bases, "base norms for the norm checks; repeatable");
    check_cmd->add_option("--corollaries", corollaries, "check phi_1..phi_c besides the theorem functional");
    add_output_flags(check_cmd, out);

    bool list = false;
    std::string run_id;
    std::optional<Index> param_n;
    std::optional<Index> param_N;
    auto* examples_cmd = app.add_subcommand("examples", "list or run the built-in gallery");
    auto* list_opt = examples_cmd->add_flag("--list", list, "list entries");
    auto* run_opt = examples_cmd->add_option("--run", run_id, "run one entry");
    list_opt->excludes(run_opt);
    examples_cmd->add_option("--n", param_n, "n for the truncated polynomial ideal");
    examples_cmd->add_option("--N", param_N, "N for the truncated polynomial ideal (default 4n)");
    add_output_flags(examples_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: FlagError: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (analyze_cmd->parsed()) {
            const auto report = analyze(load_algebra(spec_path));
            if (out.json()) {
                std::cout << to_json(report, out.render()).dump(2) << "\n";
            } else {
                print_analysis(report, out);
            }
            return kExitOk;
        }

        if (norms_cmd->parsed()) {
            const AlgebraSpec algebra = load_algebra(spec_path);
            validate(algebra);
            const BaseNormTag base = parse_base(base_text);
            const FunctionalSpec f = parse_functional(functional_text, algebra);
            std::vector<Element> elements;
            for (const auto& p : eval_paths) elements.push_back(load_element(p, algebra));
            for (Index k : basis_indices) elements.push_back(canonical_basis_element(algebra, k));
            if (elements.empty()) throw Error(ErrorKind::FlagError, "nothing to evaluate: pass --eval or --basis");

            const NormSpec p{base, f};
            Json rows = Json::array();
            if (!out.json()) std::cout << "element\t" << to_string(base) << "\tphi\tp (" << f.label() << ")\n";
            for (const auto& a : elements) {
                const Magnitude b = base_norm(base, a);
                const GaussianRational phi = eval_phi(f, a);
                const Magnitude pv = eval_norm(p, a);
                if (out.json()) {
                    rows.push_back({{"element", algebra.render(a)},
                                    {"base", to_json(b, out.render())},
                                    {"phi", to_json(phi)},
                                    {"p", to_json(pv, out.render())}});
                } else {
                    std::cout << algebra.render(a) << "\t" << out.value(b) << "\t" << out.value(phi) << "\t"
                              << out.value(pv) << "\n";
                }
            }
            if (out.json()) {
                std::cout << Json{{"algebra", algebra.describe()},
                                  {"functional", f.label()},
                                  {"base", to_string(base)},
                                  {"values", std::move(rows)}}
                                 .dump(2)
                          << "\n";
            }
            return kExitOk;
        }

        if (witness_cmd->parsed()) {
            if (m == n) throw Error(ErrorKind::FlagError, "--m and --n must differ");
            if (m == 0 || n == 0) throw Error(ErrorKind::FlagError, "--m and --n start at 1");
            if (k_max < 2) throw Error(ErrorKind::FlagError, "--k-max must be at least 2");
            const AlgebraSpec algebra = load_algebra(spec_path);
            validate(algebra);
            const auto report = inequivalence_witness(algebra, m, n, k_max, parse_base(base_text));
            if (out.format == "csv") {
                std::cout << witness_csv(report);
            } else if (out.json()) {
                std::cout << to_json(report, out.render()).dump(2) << "\n";
            } else {
                print_witness_table(report, out);
            }
            return kExitOk;
        }

        if (check_cmd->parsed()) {
            SuiteConfig config;
            config.sampler.seed = seed.value_or(default_seed());
            config.sampler.trials = trials;
            config.negative_control = negative;
            config.corollaries = corollaries;
            config.bases.clear();
            for (const auto& b : bases) config.bases.push_back(parse_base(b));
            if (spec_path.empty()) return print_suite(run_suite(config), out);
            const AlgebraSpec algebra = load_algebra(spec_path);
            validate(algebra);
            return print_suite(run_suite(algebra, config), out);
        }

        if (examples_cmd->parsed()) {
            if (!list && run_id.empty()) throw Error(ErrorKind::FlagError, "examples needs --list or --run <id>");
            if (list) {
                const auto entries = list_entries();
                const auto problems = self_test();
                if (out.json()) {
                    Json arr = Json::array();
                    for (const auto& e : entries) arr.push_back(to_json(e));
                    std::cout << Json{{"entries", std::move(arr)}, {"self_test", problems}}.dump(2) << "\n";
                } else {
                    for (const auto& e : entries) print_entry_line(e);
                    std::cout << "self-test: " << (problems.empty() ? "all computable entries reproduce" : "FAILED")
                              << "\n";
                    for (const auto& p : problems) std::cout << "  " << p << "\n";
                }
                return problems.empty() ? kExitOk : kExitViolation;
            }
            try {
                const auto run = run_entry(run_id, {param_n, param_N});
                if (out.json()) {
                    std::cout << to_json(run, out.render()).dump(2) << "\n";
                } else {
                    print_gallery_run(run, out);
                }
                return run.mismatches.empty() ? kExitOk : kExitViolation;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::SymbolicOnly) throw;
                const auto entry = find_entry(run_id);
                if (out.json()) {
                    Json j = to_json(entry);
                    j["symbolic_only"] = true;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "entry: " << entry.id << " (" << entry.title << ")\n";
                    std::cout << "symbolic only: no finite representation is computed\n";
                    for (const auto& note : entry.notes) std::cout << "note: " << note << "\n";
                }
                return kExitOk;
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return kExitOk;
}
