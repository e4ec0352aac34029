#pragma once

// Exact-arithmetic checkers for the bound theorems, recurrence identities
// and proof inequalities, each producing a structured report whose verdict
// can be re-derived from its two cross-multiplied sides.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "psik/group.hpp"
#include "psik/psi.hpp"
#include "psik/search_families.hpp"

namespace psik {

enum class TheoremId {
    MainBound,        // psi_k(G) <= (1+3*2^k)/(1+2^k+2*4^k) psi_k(Z_n), G non-cyclic
    Herzog,           // k = 1 specialization with coefficients (7, 11)
    MaxCyclic,        // psi_k(G) < psi_k(Z_n) for all non-cyclic G
    MinPrimeExponent, // abelian p-group minimum at the all-ones partition
    QBound,           // (q-1)^k psi_k(G) < psi_k(Z_n), q smallest prime of n
    OddOrder,         // 2^k psi_k(G) < psi_k(Z_n) for odd non-cyclic G
    CyclicLower,      // (1+p+...+p^k) psi_k(Z_n) > q^k n^(k+1)
    Tightness,        // exact equality for Z_t x Z_2 x Z_2 vs Z_4t, t odd
    IneqLemma43,      // psi_k(Z_{n/2}) + (n/2)(n/3)^k vs bound, n = 2^a 3^b
    IneqLemma44,      // psi_k(Z_{n/3}) + (2n/3)(n/3)^k vs bound
    IneqLemma45,      // (1+2*4^k+2^k)(1+p+...+p^k) < (1+3*2^k) q^k p^k
    ProductIneq,      // psi_k(AxB) <= psi_k(A) psi_k(B), equality iff coprime
    SemidirectIdentity, // psi_k(G) = psi_k(P)psi_k(Z) + |P|(psi_k(F)-psi_k(Z)), and
                        // the quotient bound psi_k(G) <= psi_k(P)psi_k(F)
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name); // usage_error lists valid ids
std::vector<std::string> all_theorem_names();

enum class Verdict { HoldsStrict, HoldsEquality, Violated };
const char* verdict_name(Verdict v);

struct BoundReport {
    TheoremId theorem = TheoremId::MainBound;
    // Ordered reproduction parameters (group, n, k, ...).
    std::vector<std::pair<std::string, std::string>> instance;
    Natural lhs_scaled;
    Natural rhs_scaled;
    Verdict verdict = Verdict::Violated;
    Natural margin; // |lhs - rhs|
};

/// Main-bound coefficient pair: lhs side gets 1 + 2^k + 2*4^k, rhs side
/// 1 + 3*2^k. At k = 1 these are exactly (11, 7).
Natural main_bound_coeff_lhs(unsigned k);
Natural main_bound_coeff_rhs(unsigned k);

BoundReport check_main_bound(const GroupSpec& spec, unsigned k);
BoundReport check_herzog_k1(const GroupSpec& spec);
BoundReport check_max_at_cyclic(std::uint64_t n, unsigned k, const FamilyOptions& families = {});
BoundReport check_min_prime_exponent(const Natural& p, unsigned m, unsigned k);
/// Same minimum criterion extended over nilpotent direct products of the
/// supported Sylow families of order n.
BoundReport check_min_nilpotent(std::uint64_t n, unsigned k);
BoundReport check_q_bound(const GroupSpec& spec, unsigned k);
BoundReport check_odd_order(const GroupSpec& spec, unsigned k);
BoundReport check_cyclic_lower_bound(const Natural& n, unsigned k);
BoundReport check_tightness(const Natural& t, unsigned k);
BoundReport check_ineq_lemma_4_3(unsigned a, unsigned b, unsigned k);
BoundReport check_ineq_lemma_4_4(unsigned a, unsigned b, unsigned k);
BoundReport check_ineq_lemma_4_5(const Natural& p, const Natural& q, unsigned k);
BoundReport check_product_inequality(const GroupSpec& a, const GroupSpec& b, unsigned k);
/// Two reports per (instance, k): the spectrum-vs-formula identity and the
/// Lemma-2.7 quotient bound. With brute_force the group side is recomputed
/// by definitional element-order enumeration.
std::vector<BoundReport> check_semidirect_identity(const SemidirectSpec& spec, unsigned k,
                                                   bool brute_force);

struct SuiteConfig {
    std::vector<TheoremId> theorems;      // empty = all
    std::uint64_t n_max = 500;            // order scans
    bool n_max_set = false;               // true when the user pinned n_max
    std::uint64_t n_exact = 0;            // nonzero = check this order only
    unsigned k_max = 8;
    unsigned k_exact = 0;                 // nonzero = check this k only
    std::uint64_t t_max = 99;             // tightness sweep
    unsigned ab_max = 6;                  // lemmas 4.3/4.4 exponent grid
    std::uint64_t p_max = 97;             // ineq-4-5 prime grid
    std::vector<std::uint64_t> q_set = {2, 3, 5};
    std::uint64_t pair_cap = 1000;        // product inequality |A||B| cap
    unsigned pair_k_max = 4;
    std::uint64_t sd_n_max = 500;         // semidirect identity order cap
    unsigned sd_k_max = 6;
    bool sd_brute_force = false;
    FamilyOptions families;
    unsigned workers = 0;                 // 0 = hardware concurrency
};

/// Run the configured checkers, streaming reports in deterministic order
/// (theorem, then instance parameters) regardless of worker count.
void run_suite(const SuiteConfig& config, const std::function<void(const BoundReport&)>& sink);
std::vector<BoundReport> run_suite(const SuiteConfig& config);

bool any_violated(const std::vector<BoundReport>& reports);

} // namespace psik
