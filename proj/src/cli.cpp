#include "defectus/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "defectus/congruence.hpp"
#include "defectus/io.hpp"

namespace defectus {

using json = nlohmann::json;

namespace {

// ---------- shared plumbing ----------

uint64_t default_seed() {
    const char* env = std::getenv("DEFECTUS_SEED");
    if (!env || !*env) return 1;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw Error(ErrorCode::parse_error,
                    std::string("DEFECTUS_SEED must be a decimal integer, got '") + env + "'");
    return static_cast<uint64_t>(v);
}

std::vector<long> parse_exponent_list(const std::string& text) {
    std::vector<long> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::parse_error,
                        "exponent list must be comma-separated nonnegative integers, got '" +
                            text + "'");
        out.push_back(std::stol(item));
    }
    if (out.empty())
        throw Error(ErrorCode::parse_error, "exponent list is empty");
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::bad_input, "cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, "bad JSON in '" + path + "': " + e.what());
    }
}

// The point a command operates on: an explicit matrix file, or the
// normalized point built from --m/--n/--exponents.
Matrix load_point(const RunConfig& cfg) {
    if (cfg.input_path) {
        Matrix M = matrix_from_json(read_json_file(*cfg.input_path));
        if (cfg.backend_explicit && M.backend() != cfg.backend)
            throw Error(ErrorCode::backend_mismatch,
                        "--backend " + cfg.backend.to_string() + " contradicts the input file (" +
                            M.backend().to_string() + ")");
        return M;
    }
    if (!cfg.m || !cfg.n || !cfg.exponents)
        throw Error(ErrorCode::bad_input, "need --input, or --m with --n and --exponents");
    NormalizedPointSpec spec(ProblemShape(*cfg.m, *cfg.n), *cfg.exponents);
    return normalized_point(spec, cfg.backend);
}

std::string valuation_text(const Valuation& v) { return v.to_string(); }

std::string optional_text(const std::optional<Valuation>& v, const char* absent) {
    return v ? v->to_string() : absent;
}

// ---------- report rendering ----------

const char* kCsvHeader = "m,n,backend,rank,w,psi,phi_A,phi_C,colength,delta,checks_passed";

std::string report_csv_row(const DefectReport& r) {
    std::ostringstream o;
    o << r.shape.m << ',' << r.shape.n << ',' << r.backend.to_string() << ',' << r.rank << ','
      << valuation_text(r.w) << ',' << optional_text(r.psi_length, "") << ','
      << optional_text(r.phi_A_length, "") << ',' << optional_text(r.phi_C_length, "") << ','
      << optional_text(r.conductor_colength, "") << ','
      << (r.delta ? std::to_string(*r.delta) : "") << ','
      << (r.all_checks_pass() ? "true" : "false");
    return o.str();
}

void report_table(const DefectReport& r, std::ostream& out) {
    auto kv = [&](const char* key, const std::string& value) {
        out << std::left << std::setw(20) << key << value << "\n";
    };
    kv("shape", std::to_string(r.shape.m) + " x " + std::to_string(r.shape.n) +
                    "   (t = " + std::to_string(r.shape.t) + ")");
    kv("backend", r.backend.to_string());
    kv("on variety", r.on_variety ? "yes" : "no");
    kv("rank", std::to_string(r.rank));
    kv("regular (A side)", r.regular_A ? "yes" : "no");
    kv("regular (C side)", r.regular_C ? "yes" : "no");
    kv("w", valuation_text(r.w));
    kv("w (torsion route)", optional_text(r.w_alt, "-"));
    kv("psi length", optional_text(r.psi_length, "-"));
    kv("phi_A length", optional_text(r.phi_A_length, "-"));
    kv("phi_C length", optional_text(r.phi_C_length, "-"));
    kv("conductor colength", optional_text(r.conductor_colength, "-"));
    kv("delta", r.delta ? std::to_string(*r.delta) : "-");
    if (r.checks.empty()) {
        kv("checks", "none (point not regular)");
    } else {
        std::string line;
        for (const auto& [name, ok] : r.checks) {
            if (!line.empty()) line += ", ";
            line += name + (ok ? " ok" : " FAILED");
        }
        kv("checks", line);
    }
}

// Structured stderr record for a failed identity: which checks failed, on
// which point, with the full report as witness.
void emit_finding(const DefectReport& rep, const Matrix& point, std::ostream& err) {
    json failed = json::array();
    for (const auto& [name, ok] : rep.checks)
        if (!ok) failed.push_back(name);
    json finding = {{"finding", {{"failed_checks", std::move(failed)},
                                 {"report", report_to_json(rep)},
                                 {"point", matrix_to_json(point)}}}};
    err << finding.dump() << "\n";
}

// ---------- commands ----------

int render_single_report(const DefectReport& rep, const Matrix& a, const RunConfig& cfg,
                         std::ostream& out, std::ostream& err) {
    if (cfg.format == "json") {
        out << report_to_json(rep).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << kCsvHeader << "\n" << report_csv_row(rep) << "\n";
    } else {
        report_table(rep, out);
    }
    if (!rep.all_checks_pass()) {
        emit_finding(rep, a, err);
        return 2;
    }
    return 0;
}

int cmd_analyze_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Matrix a = load_point(cfg);
    DefectReport rep = analyze_point(a);
    return render_single_report(rep, a, cfg, out, err);
}

int cmd_normalize_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.input_path)
        throw Error(ErrorCode::bad_input, "normalize needs --input");
    Matrix M = matrix_from_json(read_json_file(*cfg.input_path));
    const ProblemShape shape(M.rows(), M.cols());
    if (!minor_ideal_valuation(M, shape.m).is_infinite())
        throw Error(ErrorCode::point_not_on_variety,
                    "some maximal minor of the input is nonzero");

    SmithDecomposition snf = smith_form(M);
    // re-verify the decomposition before showing it
    if (snf.left * M * snf.right != snf.diagonal(M.rows(), M.cols())) {
        err << "internal check failed: transform product does not reproduce the diagonal\n";
        return 2;
    }

    if (cfg.format == "json") {
        out << smith_to_json(snf, M, cfg.transforms).dump(2) << "\n";
    } else {
        out << std::left << std::setw(20) << "rank" << snf.rank << "\n";
        std::string exps;
        for (long e : snf.exponents) exps += (exps.empty() ? "" : " ") + std::to_string(e);
        out << std::left << std::setw(20) << "exponents" << (exps.empty() ? "-" : exps) << "\n";
        if (cfg.transforms) {
            json t = smith_to_json(snf, M, true);
            out << "left\n" << t["left"].dump(2) << "\nright\n" << t["right"].dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_sample_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.m || !cfg.n)
        throw Error(ErrorCode::bad_input, "sample needs --m and --n");
    if (cfg.count < 0)
        throw Error(ErrorCode::bad_input, "--count must be nonnegative");
    const ProblemShape shape(*cfg.m, *cfg.n);
    if (cfg.exponents) // validate the profile before sampling anything
        NormalizedPointSpec(shape, *cfg.exponents);

    std::mt19937_64 seeder(cfg.seed);
    std::vector<uint64_t> seeds(static_cast<size_t>(cfg.count));
    for (auto& s : seeds) s = seeder();

    std::vector<std::optional<Matrix>> points(seeds.size());
    std::vector<std::optional<DefectReport>> reports(seeds.size());
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < cfg.count; ++i) {
        try {
            Matrix a = sample_variety_point(shape, cfg.backend, cfg.exponents,
                                            seeds[static_cast<size_t>(i)]);
            reports[static_cast<size_t>(i)] = analyze_point(a);
            points[static_cast<size_t>(i)] = std::move(a);
        } catch (...) {
#pragma omp critical
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);

    bool all_pass = true;
    if (cfg.format == "csv" && cfg.count > 0) out << kCsvHeader << "\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const DefectReport& rep = *reports[i];
        if (cfg.format == "json") {
            out << report_to_json(rep).dump() << "\n";
        } else if (cfg.format == "csv") {
            out << report_csv_row(rep) << "\n";
        } else {
            out << "point " << i << "\n";
            report_table(rep, out);
            out << "\n";
        }
        if (!rep.all_checks_pass()) {
            all_pass = false;
            emit_finding(rep, *points[i], err);
        }
    }
    return all_pass ? 0 : 2;
}

// ---------- the verification suite ----------

struct SuiteItem {
    std::string name;
    long cases = 0;
    long failures = 0;
};

// every nondecreasing exponent profile of the given length with entries <= cap
std::vector<std::vector<long>> profiles_up_to(int length, long cap) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<size_t>(length));
    auto rec = [&](auto&& self, int pos, long lo) -> void {
        if (pos == length) {
            out.push_back(cur);
            return;
        }
        for (long v = lo; v <= cap; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<ProblemShape> suite_grid(bool quick) {
    const int max_m = quick ? 3 : 4;
    const int max_n = quick ? 5 : 7;
    std::vector<ProblemShape> shapes;
    for (int m = 2; m <= max_m; ++m)
        for (int n = m; n <= max_n; ++n) shapes.emplace_back(m, n);
    return shapes;
}

int cmd_verify_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::vector<ProblemShape> grid = suite_grid(cfg.quick);
    const long cap = 6;
    std::vector<SuiteItem> items;

    { // main-diagonal dominance and window-support disjointness (backend-free)
        SuiteItem item{"initial-monomial dominance"};
        for (int size = 2; size <= 6; ++size) {
            ++item.cases;
            if (!initial_monomial_check(size)) ++item.failures;
        }
        items.push_back(item);
    }

    SuiteItem derivative{"derivative pattern at normalized points"};
    SuiteItem triangular{"triangular Jacobian submatrix"};
    SuiteItem conductor{"conductor identity at normalized points"};
    SuiteItem lengths{"length formulas at sampled points"};
    SuiteItem invariance{"unimodular invariance"};
    SuiteItem translated{"conductor identity at scrambled points"};

    for (const Backend& bk : cfg.suite_backends) {
        for (const ProblemShape& shape : grid) {
            for (const auto& profile : profiles_up_to(shape.t, cap)) {
                NormalizedPointSpec spec(shape, profile);
                ++derivative.cases;
                if (!derivative_pattern_check(spec, bk)) ++derivative.failures;
                ++triangular.cases;
                if (!triangular_submatrix_check(spec, bk)) ++triangular.failures;

                // conductor + IKM identity, directly on the normalized point
                Matrix a = normalized_point(spec, bk);
                DefectReport rep = analyze_point(a);
                ++conductor.cases;
                const long w = spec.exponent_sum();
                const bool colength_ok =
                    rep.conductor_colength &&
                    *rep.conductor_colength == Valuation::of(w).times(shape.n - shape.m);
                if (!(rep.regular_C && colength_ok && rep.all_checks_pass()))
                    ++conductor.failures;
            }
        }

        // free-sampled points: the three length identities recorded by analyze
        std::mt19937_64 rng(cfg.seed);
        const long sampled = cfg.quick ? 15 : 40;
        for (long i = 0; i < sampled; ++i) {
            const ProblemShape& shape = grid[static_cast<size_t>(rng() % grid.size())];
            Matrix a = sample_variety_point(shape, bk, std::nullopt, rng());
            DefectReport rep = analyze_point(a);
            ++lengths.cases;
            if (!(rep.regular_A && rep.checks.at("w_alt") && rep.checks.at("phi_A") &&
                  rep.checks.at("delta")))
                ++lengths.failures;
        }

        // invariance of (w, psi, delta) under two-sided unimodular scrambles
        const long probe_points = cfg.quick ? 2 : 5;
        const long trials = cfg.quick ? 5 : 10;
        for (long i = 0; i < probe_points; ++i) {
            const ProblemShape& shape = grid[static_cast<size_t>(rng() % grid.size())];
            std::vector<long> profile(static_cast<size_t>(shape.t));
            for (auto& e : profile) e = static_cast<long>(rng() % 4);
            std::sort(profile.begin(), profile.end());
            Matrix a = normalized_point(NormalizedPointSpec(shape, profile), bk);
            ++invariance.cases;
            if (!invariance_probe(a, trials, rng())) ++invariance.failures;
        }

        // IKM identity re-derived at unimodular translates, where C stays regular
        const long translates = cfg.quick ? 5 : 10;
        for (long i = 0; i < translates; ++i) {
            const ProblemShape& shape = grid[static_cast<size_t>(rng() % grid.size())];
            std::vector<long> profile(static_cast<size_t>(shape.t));
            for (auto& e : profile) e = static_cast<long>(rng() % 4);
            std::sort(profile.begin(), profile.end());
            Matrix a = sample_variety_point(shape, bk, profile, rng());
            ++translated.cases;
            try {
                if (!crosscheck_ikm(a).pass) ++translated.failures;
            } catch (const Error& e) {
                // C may fail to be regular at a translate; that is a skip, not a failure
                if (e.code() != ErrorCode::precondition_violated) throw;
            }
        }
    }

    items.push_back(derivative);
    items.push_back(triangular);
    items.push_back(conductor);
    items.push_back(lengths);
    items.push_back(invariance);
    items.push_back(translated);

    bool all_pass = true;
    for (const auto& item : items)
        if (item.failures > 0) all_pass = false;

    if (cfg.format == "json") {
        json results = json::array();
        for (const auto& item : items)
            results.push_back({{"name", item.name},
                               {"cases", item.cases},
                               {"failures", item.failures},
                               {"passed", item.failures == 0}});
        out << json{{"results", std::move(results)}, {"all_pass", all_pass}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "name,passed,cases,failures\n";
        for (const auto& item : items)
            out << item.name << ',' << (item.failures == 0 ? "true" : "false") << ','
                << item.cases << ',' << item.failures << "\n";
    } else {
        for (const auto& item : items)
            out << (item.failures == 0 ? "PASS  " : "FAIL  ") << std::left << std::setw(44)
                << item.name << std::right << std::setw(6) << item.cases << " cases"
                << (item.failures ? "  (" + std::to_string(item.failures) + " failed)" : "")
                << "\n";
        out << (all_pass ? "all identities verified\n" : "FAILURES DETECTED\n");
    }
    return all_pass ? 0 : 2;
}

template <typename Fn>
int guard(Fn&& fn, std::ostream& err) {
    try {
        return fn();
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
}

} // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guard([&] { return cmd_analyze_impl(cfg, out, err); }, err);
}
int cmd_normalize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guard([&] { return cmd_normalize_impl(cfg, out, err); }, err);
}
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guard([&] { return cmd_sample_impl(cfg, out, err); }, err);
}
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guard([&] { return cmd_verify_impl(cfg, out, err); }, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of determinantal points over a discrete valuation ring: "
                 "congruence-module lengths, cotangent torsion, conductor colengths, defects."};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string backend_flag;
    std::string exponents_flag;
    std::vector<std::string> verify_backends;

    auto add_common = [&](CLI::App* sub, bool with_format_csv) {
        sub->add_option("--backend", backend_flag, "ring backend, int:<p> or poly:<q>");
        sub->add_option("--seed", cfg.seed, "PRNG seed (default 1, or DEFECTUS_SEED)");
        std::vector<std::string> formats = with_format_csv
                                               ? std::vector<std::string>{"json", "csv", "table"}
                                               : std::vector<std::string>{"json", "table"};
        sub->add_option("--format", cfg.format, "output format (default json)")
            ->check(CLI::IsMember(formats));
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "analyze one point: rank, regularity, lengths, defect, identity checks");
    add_common(analyze, true);
    analyze->add_option("--input", cfg.input_path, "matrix JSON file");
    analyze->add_option("--m", cfg.m, "rows of the generic matrix");
    analyze->add_option("--n", cfg.n, "columns of the generic matrix");
    analyze->add_option("--exponents", exponents_flag,
                        "comma-separated nondecreasing exponents (length m-1)");

    CLI::App* normalize =
        app.add_subcommand("normalize", "diagonalize a point: invariant exponents and factors");
    add_common(normalize, false);
    normalize->add_option("--input", cfg.input_path, "matrix JSON file")->required();
    normalize->add_flag("--transforms", cfg.transforms, "include the unimodular factors");

    CLI::App* sample =
        app.add_subcommand("sample", "sample points on the variety and analyze each");
    add_common(sample, true);
    sample->add_option("--m", cfg.m, "rows")->required();
    sample->add_option("--n", cfg.n, "columns")->required();
    sample->add_option("--count", cfg.count, "number of points (default 1)");
    sample->add_option("--exponents", exponents_flag,
                       "profile for exponent-controlled sampling (comma-separated)");

    CLI::App* verify =
        app.add_subcommand("verify", "run the full identity suite over a shape grid");
    verify->add_option("--backend", verify_backends,
                       "backend(s) to sweep; default int:2 and int:5");
    verify->add_option("--seed", cfg.seed, "PRNG seed (default 1, or DEFECTUS_SEED)");
    verify->add_option("--format", cfg.format, "output format (default table)")
        ->check(CLI::IsMember(std::vector<std::string>{"json", "csv", "table"}));
    verify->add_flag("--quick", cfg.quick, "reduced grid (m <= 3, n <= 5)");

    std::vector<const char*> argv;
    argv.push_back("defectus");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    return guard(
        [&]() -> int {
            CLI::App* active = verify->parsed()      ? verify
                               : analyze->parsed()   ? analyze
                               : normalize->parsed() ? normalize
                                                     : sample;
            auto given = [&](const char* name) {
                const CLI::Option* opt = active->get_option_no_throw(name);
                return opt != nullptr && opt->count() > 0;
            };
            if (!given("--seed")) cfg.seed = default_seed();
            if (!given("--format"))
                cfg.format = verify->parsed() ? "table" : "json";

            if (verify->parsed()) {
                if (verify_backends.empty()) {
                    cfg.suite_backends = {Backend::int_local(2), Backend::int_local(5)};
                } else {
                    for (const auto& b : verify_backends)
                        cfg.suite_backends.push_back(Backend::parse(b));
                }
                return cmd_verify_impl(cfg, out, err);
            }

            cfg.backend_explicit = given("--backend");
            cfg.backend = cfg.backend_explicit ? Backend::parse(backend_flag)
                                               : Backend::int_local(5);
            if (given("--exponents")) cfg.exponents = parse_exponent_list(exponents_flag);

            if (analyze->parsed()) return cmd_analyze_impl(cfg, out, err);
            if (normalize->parsed()) return cmd_normalize_impl(cfg, out, err);
            return cmd_sample_impl(cfg, out, err);
        },
        err);
}

} // namespace defectus
