// psik: exact arithmetic for sums of powers of element orders in finite
// groups. Subcommands: compute, spectrum, verify, search, cache.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "psik/cache.hpp"
#include "psik/parse.hpp"
#include "psik/report.hpp"
#include "psik/search.hpp"
#include "psik/verify.hpp"

namespace {

using namespace psik;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolated = 3;

bool contains_cayley(const GroupSpec& spec) {
    if (spec.get_if<CayleySpec>()) return true;
    if (const auto* p = spec.get_if<ProductSpec>())
        for (const auto& f : p->factors)
            if (contains_cayley(f)) return true;
    return false;
}

CayleyCheckPolicy policy_from_name(const std::string& name) {
    if (name == "auto") return CayleyCheckPolicy::Auto;
    if (name == "always") return CayleyCheckPolicy::Always;
    if (name == "never") return CayleyCheckPolicy::Never;
    throw usage_error("unknown --cayley-check mode '" + name + "'; valid: auto always never");
}

struct CommonOpts {
    std::string format = "table";
    std::string cayley_check = "auto";
    unsigned workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format: table, json, csv")
        ->envname("PSIK_FORMAT");
    cmd->add_option("--cayley-check", o.cayley_check,
                    "Cayley associativity checking: auto (n <= 512), always, never")
        ->envname("PSIK_CAYLEY_CHECK");
    cmd->add_option("--workers", o.workers, "Worker threads (0 = hardware)")
        ->envname("PSIK_WORKERS");
}

int run(int argc, char** argv) {
    CLI::App app{"exact psi_k computations and theorem verification for finite groups"};
    app.require_subcommand(1);
    app.footer(
        "Spec syntax: C<n> cyclic | D<m> dihedral of order 2m (D18 has 36 elements) |\n"
        "  Dic<m> dicyclic of order 4m | A[p:r1,r2;q:s1] abelian by prime partitions |\n"
        "  SD(p^r,m,a) semidirect Z_{p^r} x| Z_m with action u -> u^a | file:<cayley.json> |\n"
        "  products with '*', e.g. C4*C3*C3.\n"
        "Exit codes: 0 ok, 1 usage, 2 invalid input, 3 a verified statement was VIOLATED.");

    if (const char* mk = std::getenv("PSIK_MAX_K")) set_max_k(static_cast<unsigned>(std::stoul(mk)));

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "Compute psi_k of a group spec");
    std::string compute_spec;
    unsigned compute_k = 1;
    std::string cache_path;
    bool verify_cache = false;
    CommonOpts compute_opts;
    compute->add_option("spec", compute_spec, "Group spec, e.g. D18 or C4*C3*C3")->required();
    compute->add_option("--k", compute_k, "Power k >= 1");
    compute->add_option("--cache", cache_path, "Append-only psi cache file")->envname("PSIK_CACHE");
    compute->add_flag("--verify-cache", verify_cache, "Recompute cache hits and compare");
    add_common(compute, compute_opts);

    // ---- spectrum ----
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the order spectrum of a group spec");
    std::string spectrum_spec;
    CommonOpts spectrum_opts;
    spectrum_cmd->add_option("spec", spectrum_spec, "Group spec")->required();
    add_common(spectrum_cmd, spectrum_opts);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Run a theorem checker suite");
    std::string theorem = "all";
    SuiteConfig config;
    CommonOpts verify_opts;
    std::uint64_t vf_nmax = 0, vf_n = 0;
    verify->add_option("theorem", theorem,
                       "Theorem id (see --list) or 'all'");
    bool list_ids = false;
    verify->add_flag("--list", list_ids, "List theorem ids and exit");
    verify->add_option("--n-max", vf_nmax, "Order scan limit (per-theorem default otherwise)")
        ->envname("PSIK_N_MAX");
    verify->add_option("--n", vf_n, "Check a single order");
    verify->add_option("--k-max", config.k_max, "Largest k")->envname("PSIK_K_MAX");
    verify->add_option("--k", config.k_exact, "Check a single k instead of 1..k-max");
    verify->add_option("--t-max", config.t_max, "Tightness sweep limit (odd t)")
        ->envname("PSIK_T_MAX");
    verify->add_option("--ab-max", config.ab_max, "Grid limit for lemmas 4.3/4.4");
    verify->add_option("--p-max", config.p_max, "Prime limit for ineq-4-5");
    verify->add_option("--pair-k-max", config.pair_k_max, "Largest k for product-ineq");
    verify->add_option("--sd-k-max", config.sd_k_max, "Largest k for semidirect-identity");
    verify->add_flag("--audit-bruteforce", config.sd_brute_force,
                     "Recompute semidirect spectra by element-order enumeration");
    add_common(verify, verify_opts);

    // ---- search ----
    auto* search = app.add_subcommand("search", "Scan families for extremal behaviour");
    search->require_subcommand(1);
    auto* reversal = search->add_subcommand("reversal", "Find psi/psi_k order reversals");
    std::uint64_t rev_n = 36;
    unsigned rev_kmax = 8;
    CommonOpts rev_opts;
    reversal->add_option("--n", rev_n, "Group order")->required();
    reversal->add_option("--k-max", rev_kmax, "Largest k to scan");
    add_common(reversal, rev_opts);

    auto* extremal = search->add_subcommand("extremal", "Rank psi_k over all families of order n");
    std::uint64_t ext_n = 8;
    unsigned ext_k = 1;
    CommonOpts ext_opts;
    extremal->add_option("--n", ext_n, "Group order")->required();
    extremal->add_option("--k", ext_k, "Power k");
    add_common(extremal, ext_opts);

    auto* worst = search->add_subcommand("worst-ratio", "Largest psi_k(G)/psi_k(Z_n) ratios");
    std::uint64_t worst_nmax = 100;
    unsigned worst_k = 1;
    std::size_t worst_top = 10;
    CommonOpts worst_opts;
    worst->add_option("--n-max", worst_nmax, "Order scan limit")->required();
    worst->add_option("--k", worst_k, "Power k");
    worst->add_option("--top", worst_top, "How many records to keep");
    add_common(worst, worst_opts);

    // ---- cache ----
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or verify a psi cache file");
    cache_cmd->require_subcommand(1);
    auto* cache_stats = cache_cmd->add_subcommand("stats", "Entry count and path");
    auto* cache_verify = cache_cmd->add_subcommand("verify", "Recompute every cache entry");
    std::string cache_file;
    for (auto* c : {cache_stats, cache_verify})
        c->add_option("--cache", cache_file, "Cache file")->envname("PSIK_CACHE")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    auto warn = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };

    if (compute->parsed()) {
        GroupSpec spec = parse_spec(compute_spec, policy_from_name(compute_opts.cayley_check));
        OutputFormat fmt = format_from_name(compute_opts.format);
        bool cacheable = !cache_path.empty() && !contains_cayley(spec);
        if (cacheable) {
            PsiCache cache(cache_path, warn);
            std::string key = spec.canonical();
            if (auto hit = cache.lookup(key, compute_k)) {
                if (verify_cache) {
                    PsiValue fresh = psi(spec, compute_k);
                    if (fresh.value.str() != hit->value)
                        throw validation_error("cache mismatch for " + key + ": cached " +
                                               hit->value + ", recomputed " + fresh.value.str());
                }
                PsiValue v{Natural::from_decimal(hit->value), compute_k, spec.order(), hit->route};
                emit_compute(std::cout, spec, v, fmt);
                return kExitOk;
            }
            PsiValue v = psi(spec, compute_k);
            cache.store(key, compute_k, v);
            emit_compute(std::cout, spec, v, fmt);
            return kExitOk;
        }
        emit_compute(std::cout, spec, psi(spec, compute_k), fmt);
        return kExitOk;
    }

    if (spectrum_cmd->parsed()) {
        GroupSpec spec = parse_spec(spectrum_spec, policy_from_name(spectrum_opts.cayley_check));
        emit_spectrum(std::cout, spec, spectrum(spec), format_from_name(spectrum_opts.format));
        return kExitOk;
    }

    if (verify->parsed()) {
        if (list_ids) {
            for (const auto& name : all_theorem_names()) std::cout << name << '\n';
            std::cout << "all\n";
            return kExitOk;
        }
        if (theorem != "all") config.theorems.push_back(theorem_from_name(theorem));
        if (vf_nmax) {
            config.n_max = vf_nmax;
            config.n_max_set = true;
        }
        config.n_exact = vf_n;
        config.workers = verify_opts.workers;
        std::size_t violated = 0;
        {
            ReportEmitter emitter(std::cout, format_from_name(verify_opts.format));
            run_suite(config, [&](const BoundReport& r) {
                emitter.emit(r);
                if (r.verdict == Verdict::Violated) ++violated;
            });
        }
        if (violated) {
            std::cerr << violated << " VIOLATED report(s)\n";
            return kExitViolated;
        }
        return kExitOk;
    }

    if (reversal->parsed()) {
        emit_reversals(std::cout, find_reversals(rev_n, rev_kmax),
                       format_from_name(rev_opts.format));
        return kExitOk;
    }
    if (extremal->parsed()) {
        emit_extremal(std::cout, ext_n, ext_k, extremal_over_order(ext_n, ext_k),
                      format_from_name(ext_opts.format));
        return kExitOk;
    }
    if (worst->parsed()) {
        RatioScanResult res = worst_ratio_scan(worst_nmax, worst_k, worst_top, FamilyOptions{},
                                               worst_opts.workers);
        emit_ratios(std::cout, res, format_from_name(worst_opts.format));
        if (!res.violations.empty()) {
            ReportEmitter emitter(std::cerr, OutputFormat::Table);
            for (const auto& v : res.violations) emitter.emit(v);
            return kExitViolated;
        }
        return kExitOk;
    }

    if (cache_stats->parsed()) {
        PsiCache cache(cache_file, warn);
        std::cout << "cache " << cache.path() << ": " << cache.size() << " entrie(s)\n";
        return kExitOk;
    }
    if (cache_verify->parsed()) {
        PsiCache cache(cache_file, warn);
        std::size_t bad =
            cache.verify_all([](const std::string& msg) { std::cerr << msg << '\n'; });
        std::cout << "verified " << cache.size() << " entrie(s), " << bad << " mismatch(es)\n";
        return bad ? kExitValidation : kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const psik::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
