#include "psik/search_families.hpp"

#include <algorithm>
#include <numeric>

namespace psik {

namespace {

std::vector<std::uint64_t> sorted_divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Element of multiplicative order exactly d modulo p^r, for d | p-1.
// Lift a mod-p element of order d by raising to p^(r-1), which kills the
// p-part of the lifted order and fixes the residue's order mod p.
Natural unit_of_order(const Natural& p, unsigned r, std::uint64_t d) {
    if (d == 1) return 1;
    Natural q = pow(p, r);
    Natural pm1 = p - 1;
    Natural exp = pm1 / Natural(d);
    Factorization dfac = factorize_u64(d);
    for (Natural c = 2; c < p; c += 1) {
        Natural x = powmod(c, exp, p);
        if (x == 1) continue;
        bool exact = true;
        for (const auto& pp : dfac.factors()) {
            if (powmod(x, Natural(d) / pp.prime, p) == 1) { exact = false; break; }
        }
        if (!exact) continue;
        Natural lifted = powmod(x, pow(p, r - 1), q);
        return lifted;
    }
    throw internal_error("no unit of order " + std::to_string(d) + " mod " + p.str() + "^" +
                         std::to_string(r));
}

} // namespace

std::vector<SemidirectSpec> semidirect_reps_of_order(std::uint64_t n) {
    std::vector<SemidirectSpec> out;
    Factorization fac = factorize_u64(n);
    for (const auto& pp : fac.factors()) {
        std::uint64_t p64 = pp.prime.to_u64();
        if (p64 == 2) continue; // units of odd order mod 2^r are trivial
        std::uint64_t q = 1;
        for (unsigned i = 0; i < pp.exponent; ++i) q *= p64;
        std::uint64_t m = n / q;
        if (m < 2) continue;
        std::uint64_t g = std::gcd(m, p64 - 1);
        for (std::uint64_t d : sorted_divisors_u64(g)) {
            if (d < 2) continue;
            Natural a = unit_of_order(pp.prime, pp.exponent, d);
            out.push_back(SemidirectSpec{pp.prime, pp.exponent, Natural(m), a});
        }
    }
    return out;
}

std::vector<SemidirectSpec> all_semidirect_of_order(std::uint64_t n) {
    std::vector<SemidirectSpec> out;
    Factorization fac = factorize_u64(n);
    for (const auto& pp : fac.factors()) {
        std::uint64_t p64 = pp.prime.to_u64();
        std::uint64_t q = 1;
        for (unsigned i = 0; i < pp.exponent; ++i) q *= p64;
        std::uint64_t m = n / q;
        if (m < 2 || std::gcd(m, p64) != 1) continue;
        for (std::uint64_t a = 1; a < q; ++a) {
            if (std::gcd(a, p64) != 1) continue;
            if (powmod(Natural(a), Natural(m), Natural(q)) == 1)
                out.push_back(SemidirectSpec{pp.prime, pp.exponent, Natural(m), Natural(a)});
        }
    }
    return out;
}

std::vector<GroupSpec> families_of_order(std::uint64_t n, const FamilyOptions& options,
                                         bool include_cyclic) {
    if (n == 0) throw usage_error("group order must be >= 1");
    std::vector<GroupSpec> out;
    if (include_cyclic) out.push_back(GroupSpec::cyclic(Natural(n)));
    if (n == 1) return out;

    Factorization fac = factorize_u64(n);

    if (options.abelian) {
        std::vector<std::vector<Partition>> choices;
        for (const auto& pp : fac.factors()) choices.push_back(partitions_of(pp.exponent));
        std::vector<std::size_t> idx(choices.size(), 0);
        for (;;) {
            bool all_single = true;
            for (std::size_t i = 0; i < idx.size(); ++i)
                if (choices[i][idx[i]].count() > 1) { all_single = false; break; }
            if (!all_single) { // the all-single-part choice is Cyclic(n)
                std::map<Natural, Partition> comps;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    comps.emplace(fac.factors()[i].prime, choices[i][idx[i]]);
                out.push_back(GroupSpec::abelian(std::move(comps)));
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    if (options.dihedral && n % 2 == 0 && n / 2 >= 2)
        out.push_back(GroupSpec::dihedral(Natural(n / 2)));
    if (options.dicyclic && n % 4 == 0 && n / 4 >= 2)
        out.push_back(GroupSpec::dicyclic(Natural(n / 4)));
    if (options.semidirect)
        for (auto& sd : semidirect_reps_of_order(n)) out.push_back(GroupSpec(sd));
    return out;
}

} // namespace psik
