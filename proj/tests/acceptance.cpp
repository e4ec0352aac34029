// Acceptance suite: executes every criterion at its stated grid and
// tolerance (all tolerances are zero: exact integer comparisons) and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "psik/parse.hpp"
#include "psik/search.hpp"
#include "psik/verify.hpp"

using namespace psik;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int num, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    auto t0 = Clock::now();
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!pass) ++failures;
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", num, label.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

struct SuiteStats {
    std::size_t total = 0;
    std::size_t violated = 0;
    std::size_t equality = 0;
    std::uint64_t hash = 1469598103934665603ULL;
};

SuiteStats run_counted(SuiteConfig config) {
    SuiteStats st;
    run_suite(config, [&](const BoundReport& r) {
        ++st.total;
        if (r.verdict == Verdict::Violated) ++st.violated;
        if (r.verdict == Verdict::HoldsEquality) ++st.equality;
        // order-sensitive FNV-style rolling hash of the rendered reports
        for (char c :
             std::string(theorem_name(r.theorem)) + verdict_name(r.verdict) +
                 r.lhs_scaled.str() + r.rhs_scaled.str()) {
            st.hash ^= static_cast<unsigned char>(c);
            st.hash *= 1099511628211ULL;
        }
        for (const auto& [k, v] : r.instance)
            for (char c : k + v) {
                st.hash ^= static_cast<unsigned char>(c);
                st.hash *= 1099511628211ULL;
            }
    });
    return st;
}

} // namespace

int main() {
    criterion(1, "counterexample reproduction (psi and psi_6 of the order-36 pair)", [](std::string& d) {
        auto t0 = Clock::now();
        GroupSpec g1 = parse_spec("D18");
        GroupSpec g2 = parse_spec("C4*C3*C3");
        Natural p1 = psi(g1, 1).value, p2 = psi(g2, 1).value;
        Natural h1 = psi(g1, 6).value, h2 = psi(g2, 6).value;
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        d = "psi=" + p1.str() + "/" + p2.str() + " psi_6=" + h1.str() + "/" + h2.str();
        return p1 == 219 && p2 == 275 && p1 < p2 && h1 == Natural(207357977) &&
               h2 == Natural(48163081) && h1 > h2 && secs < 1.0;
    });

    criterion(2, "main bound (Thm 1.6) exact over all non-cyclic instances, n <= 500, k <= 8",
              [](std::string& d) {
                  auto t0 = Clock::now();
                  SuiteConfig c;
                  c.theorems = {TheoremId::MainBound};
                  c.n_max = 500;
                  c.n_max_set = true;
                  c.k_max = 8;
                  SuiteStats st = run_counted(c);
                  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
                  d = std::to_string(st.total) + " checks, " + std::to_string(st.violated) +
                      " violated";
                  return st.total > 0 && st.violated == 0 && secs < 120.0;
              });

    criterion(3, "tightness equality for every odd t <= 99, k <= 8", [](std::string& d) {
        SuiteConfig c;
        c.theorems = {TheoremId::Tightness};
        c.t_max = 99;
        c.k_max = 8;
        std::size_t total = 0, eq = 0;
        run_suite(c, [&](const BoundReport& r) {
            ++total;
            if (r.verdict == Verdict::HoldsEquality) ++eq;
        });
        d = std::to_string(eq) + "/" + std::to_string(total) + " exact equalities";
        return total == 50 * 8 && eq == total;
    });

    criterion(4, "Herzog specialization: k = 1 coefficients are exactly (7, 11)", [](std::string& d) {
        bool coeffs = main_bound_coeff_rhs(1) == 7 && main_bound_coeff_lhs(1) == 11;
        SuiteConfig c;
        c.theorems = {TheoremId::Herzog};
        c.n_max = 500;
        c.n_max_set = true;
        SuiteStats st = run_counted(c);
        d = std::to_string(st.total) + " instances, " + std::to_string(st.violated) + " violated";
        return coeffs && st.total > 0 && st.violated == 0;
    });

    criterion(5, "four-way oracle agreement on abelian p-groups (p in {2,3,5}, m <= 8, p^m <= 2000, k <= 5)",
              [](std::string& d) {
                  auto t0 = Clock::now();
                  std::size_t checks = 0;
                  for (std::uint64_t p : {2, 3, 5}) {
                      for (unsigned m = 1; m <= 8; ++m) {
                          Natural pm = pow(Natural(p), m);
                          if (pm > 2000) break;
                          for (const auto& lam : partitions_of(m)) {
                              GroupSpec g = GroupSpec::abelian_p(Natural(p), lam);
                              OrderSpectrum closed = spectrum_abelian_p(Natural(p), lam);
                              OrderSpectrum brute = spectrum_bruteforce(build_cayley(g));
                              for (unsigned k = 1; k <= 5; ++k) {
                                  Natural a = psi_abelian_recurrence(Natural(p), lam, k);
                                  Natural b = psi_abelian_saha(Natural(p), lam, k);
                                  Natural cc = psi_from_spectrum(closed, k);
                                  Natural dd = psi_from_spectrum(brute, k);
                                  if (a != b || a != cc || a != dd) return false;
                                  ++checks;
                              }
                          }
                      }
                  }
                  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
                  d = std::to_string(checks) + " four-way checks";
                  return checks > 0 && secs < 300.0;
              });

    criterion(6, "max at cyclic (n <= 500, k in {1,2,6}) and strict abelian argmin (p^m <= 729, k <= 5)",
              [](std::string& d) {
                  std::size_t orders = 0;
                  for (std::uint64_t n = 2; n <= 500; ++n) {
                      for (unsigned k : {1u, 2u, 6u}) {
                          ExtremalResult r = extremal_over_order(n, k);
                          if (r.argmax().spec.canonical() != "C" + std::to_string(n)) return false;
                          if (r.ranked.size() > 1 && !r.max_strict()) return false;
                      }
                      ++orders;
                  }
                  std::size_t argmins = 0;
                  FamilyOptions abelian_only{true, false, false, false};
                  for (std::uint64_t p = 2; p <= 729; ++p) {
                      if (!is_prime_u64(p)) continue;
                      std::uint64_t pm = p;
                      for (unsigned m = 1; pm <= 729; ++m) {
                          std::string all_ones = "A[" + std::to_string(p) + ":1";
                          for (unsigned i = 1; i < m; ++i) all_ones += ",1";
                          all_ones += "]";
                          for (unsigned k = 1; k <= 5; ++k) {
                              BoundReport r = check_min_prime_exponent(Natural(p), m, k);
                              if (r.verdict != Verdict::HoldsStrict) return false;
                              if (m >= 2) {
                                  ExtremalResult ex =
                                      extremal_over_order(pm, k, abelian_only);
                                  if (ex.argmin().spec.canonical() != all_ones) return false;
                                  if (!ex.min_strict()) return false;
                              }
                              ++argmins;
                          }
                          if (pm > 729 / p) break;
                          pm *= p;
                      }
                  }
                  d = std::to_string(orders) + " orders, " + std::to_string(argmins) +
                      " argmin checks";
                  return orders == 499 && argmins > 0;
              });

    criterion(7, "q-bound, odd-order and cyclic lower bounds strict over n <= 500, k <= 8",
              [](std::string& d) {
                  SuiteConfig c;
                  c.theorems = {TheoremId::QBound, TheoremId::OddOrder, TheoremId::CyclicLower};
                  c.n_max = 500;
                  c.n_max_set = true;
                  c.k_max = 8;
                  SuiteStats st = run_counted(c);
                  d = std::to_string(st.total) + " checks, " + std::to_string(st.violated) +
                      " violated";
                  return st.total > 0 && st.violated == 0;
              });

    criterion(8, "inequality grids: ineq-4-3/4-4 (a,b <= 6, k <= 8), ineq-4-5 (3 < p <= 97, q in {2,3,5}, k <= 8)",
              [](std::string& d) {
                  SuiteConfig c;
                  c.theorems = {TheoremId::IneqLemma43, TheoremId::IneqLemma44,
                                TheoremId::IneqLemma45};
                  c.ab_max = 6;
                  c.k_max = 8;
                  c.p_max = 97;
                  c.q_set = {2, 3, 5};
                  SuiteStats st = run_counted(c);
                  d = std::to_string(st.total) + " grid points, " + std::to_string(st.violated) +
                      " violated";
                  // 2 lemmas * 36 * 8 + 23 primes * 3 * 8
                  return st.total == 2 * 36 * 8 + 23 * 3 * 8 && st.violated == 0;
              });

    criterion(9, "product inequality over all family pairs with |A||B| <= 1000, k <= 4",
              [](std::string& d) {
                  SuiteConfig c;
                  c.theorems = {TheoremId::ProductIneq};
                  c.pair_cap = 1000;
                  c.pair_k_max = 4;
                  SuiteStats st = run_counted(c);
                  d = std::to_string(st.total) + " pairs*k, " + std::to_string(st.equality) +
                      " coprime equalities, " + std::to_string(st.violated) + " violated";
                  return st.total > 0 && st.equality > 0 && st.equality < st.total &&
                         st.violated == 0;
              });

    criterion(10, "semidirect identity and quotient bound vs brute force, |G| <= 2000, k <= 6",
              [](std::string& d) {
                  SuiteConfig c;
                  c.theorems = {TheoremId::SemidirectIdentity};
                  c.sd_n_max = 2000;
                  c.sd_k_max = 6;
                  c.sd_brute_force = true;
                  SuiteStats st = run_counted(c);
                  d = std::to_string(st.total) + " checks, " + std::to_string(st.violated) +
                      " violated";
                  return st.total > 0 && st.violated == 0;
              });

    criterion(11, "main-bound scan n <= 10000, k = 3: deterministic across worker counts, closed forms only",
              [](std::string& d) {
                  SuiteConfig c;
                  c.theorems = {TheoremId::MainBound};
                  c.n_max = 10000;
                  c.n_max_set = true;
                  c.k_exact = 3;
                  auto t0 = Clock::now();
                  SuiteStats par = run_counted(c); // hardware workers
                  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
                  SuiteConfig c1 = c;
                  c1.workers = 1;
                  SuiteStats seq = run_counted(c1);
                  d = std::to_string(par.total) + " checks in " + std::to_string(secs) +
                      "s, hashes " + (par.hash == seq.hash ? "match" : "differ");
                  return par.total > 0 && par.violated == 0 && par.total == seq.total &&
                         par.hash == seq.hash && secs < 600.0;
              });

    std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "OK", failures);
    return failures ? 1 : 0;
}
