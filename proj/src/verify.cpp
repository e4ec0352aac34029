#include "psik/verify.hpp"

#include <algorithm>
#include <cmath>

#include "psik/parallel.hpp"

namespace psik {

namespace {

struct TheoremInfo {
    TheoremId id;
    const char* name;
};

constexpr TheoremInfo kTheorems[] = {
    {TheoremId::MainBound, "main-bound"},
    {TheoremId::Herzog, "herzog"},
    {TheoremId::MaxCyclic, "max-cyclic"},
    {TheoremId::MinPrimeExponent, "min-prime-exponent"},
    {TheoremId::QBound, "q-bound"},
    {TheoremId::OddOrder, "odd-order"},
    {TheoremId::CyclicLower, "cyclic-lower"},
    {TheoremId::Tightness, "tightness"},
    {TheoremId::IneqLemma43, "ineq-4-3"},
    {TheoremId::IneqLemma44, "ineq-4-4"},
    {TheoremId::IneqLemma45, "ineq-4-5"},
    {TheoremId::ProductIneq, "product-ineq"},
    {TheoremId::SemidirectIdentity, "semidirect-identity"},
};

Natural abs_diff(const Natural& a, const Natural& b) { return a < b ? b - a : a - b; }

BoundReport make_report(TheoremId id, std::vector<std::pair<std::string, std::string>> instance,
                        Natural lhs, Natural rhs, Verdict verdict) {
    BoundReport r;
    r.theorem = id;
    r.instance = std::move(instance);
    r.margin = abs_diff(lhs, rhs);
    r.lhs_scaled = std::move(lhs);
    r.rhs_scaled = std::move(rhs);
    r.verdict = verdict;
    return r;
}

// Verdict for an expected non-strict <=.
Verdict verdict_le(const Natural& lhs, const Natural& rhs) {
    if (lhs < rhs) return Verdict::HoldsStrict;
    if (lhs == rhs) return Verdict::HoldsEquality;
    return Verdict::Violated;
}

// Verdict for an expected strict <.
Verdict verdict_lt(const Natural& lhs, const Natural& rhs) {
    return lhs < rhs ? Verdict::HoldsStrict : Verdict::Violated;
}

void require_non_cyclic(const GroupSpec& spec) {
    if (spec.cyclic())
        throw usage_error("theorem applies only to non-cyclic groups; " + spec.canonical() +
                          " reduces to C" + spec.order().str());
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }

} // namespace

const char* theorem_name(TheoremId id) {
    for (const auto& t : kTheorems)
        if (t.id == id) return t.name;
    return "?";
}

std::vector<std::string> all_theorem_names() {
    std::vector<std::string> out;
    for (const auto& t : kTheorems) out.push_back(t.name);
    return out;
}

TheoremId theorem_from_name(const std::string& name) {
    for (const auto& t : kTheorems)
        if (name == t.name) return t.id;
    std::string valid;
    for (const auto& t : kTheorems) valid += std::string(" ") + t.name;
    throw usage_error("unknown theorem id '" + name + "'; valid ids:" + valid + " all");
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::HoldsStrict: return "HOLDS_STRICT";
    case Verdict::HoldsEquality: return "HOLDS_EQUALITY";
    default: return "VIOLATED";
    }
}

Natural main_bound_coeff_lhs(unsigned k) {
    return Natural(1) + pow(Natural(2), k) + 2 * pow(Natural(4), k);
}

Natural main_bound_coeff_rhs(unsigned k) { return Natural(1) + 3 * pow(Natural(2), k); }

BoundReport check_main_bound(const GroupSpec& spec, unsigned k) {
    require_non_cyclic(spec);
    Natural n = spec.order();
    Natural lhs = main_bound_coeff_lhs(k) * psi(spec, k).value;
    Natural rhs = main_bound_coeff_rhs(k) * psi_cyclic(n, k);
    return make_report(TheoremId::MainBound,
                       {{"group", spec.canonical()}, {"n", n.str()}, {"k", u64s(k)}},
                       lhs, rhs, verdict_le(lhs, rhs));
}

BoundReport check_herzog_k1(const GroupSpec& spec) {
    BoundReport r = check_main_bound(spec, 1);
    Natural cl = main_bound_coeff_lhs(1), cr = main_bound_coeff_rhs(1);
    if (cl != 11 || cr != 7)
        throw internal_error("k=1 main-bound coefficients are not (11, 7)");
    r.theorem = TheoremId::Herzog;
    r.instance.emplace_back("coeff_lhs", cl.str());
    r.instance.emplace_back("coeff_rhs", cr.str());
    return r;
}

BoundReport check_max_at_cyclic(std::uint64_t n, unsigned k, const FamilyOptions& families) {
    if (n < 2) throw usage_error("max-at-cyclic needs n >= 2");
    Natural pz = psi_cyclic(Natural(n), k);
    std::vector<GroupSpec> instances = families_of_order(n, families, /*include_cyclic=*/false);
    Natural worst = 0;
    const GroupSpec* arg = nullptr;
    for (const auto& g : instances) {
        Natural v = psi(g, k).value;
        if (arg == nullptr || worst < v) {
            worst = v;
            arg = &g;
        }
    }
    std::vector<std::pair<std::string, std::string>> inst = {
        {"n", u64s(n)}, {"k", u64s(k)}, {"instances", u64s(instances.size())}};
    if (arg) inst.emplace_back("closest_group", arg->canonical());
    Verdict v = instances.empty() ? Verdict::HoldsStrict : verdict_lt(worst, pz);
    return make_report(TheoremId::MaxCyclic, std::move(inst), worst, pz, v);
}

BoundReport check_min_prime_exponent(const Natural& p, unsigned m, unsigned k) {
    if (!is_prime(p)) throw usage_error(p.str() + " is not prime");
    if (m == 0) throw usage_error("exponent m must be >= 1");
    std::vector<Partition> parts = partitions_of(m);
    // The claimed strict minimizer: the all-ones (elementary abelian) type.
    Natural vmin = psi_abelian_recurrence(p, Partition(std::vector<unsigned>(m, 1)), k);
    Natural second;
    bool have_second = false;
    bool violated = false;
    std::string offender;
    for (const auto& lam : parts) {
        if (lam.all_ones()) continue;
        Natural v = psi_abelian_recurrence(p, lam, k);
        if (v <= vmin && offender.empty()) {
            violated = true;
            offender = lam.str();
        }
        if (!have_second || v < second) {
            second = v;
            have_second = true;
        }
    }
    std::vector<std::pair<std::string, std::string>> inst = {
        {"p", p.str()}, {"m", u64s(m)}, {"k", u64s(k)}, {"partitions", u64s(parts.size())}};
    if (violated) inst.emplace_back("offender", offender);
    if (!have_second) second = vmin; // single partition: trivially minimal
    return make_report(TheoremId::MinPrimeExponent, std::move(inst), vmin, second,
                       violated ? Verdict::Violated : Verdict::HoldsStrict);
}

BoundReport check_min_nilpotent(std::uint64_t n, unsigned k) {
    if (n < 2) throw usage_error("min-nilpotent needs n >= 2");
    Factorization fac = factorize_u64(n);
    // Sylow candidates per prime: abelian types, plus the 2-group dihedral
    // and dicyclic families.
    std::vector<std::vector<GroupSpec>> sylow;
    for (const auto& pp : fac.factors()) {
        std::vector<GroupSpec> cands;
        for (const auto& lam : partitions_of(pp.exponent))
            cands.push_back(GroupSpec::abelian_p(pp.prime, lam));
        if (pp.prime == 2 && pp.exponent >= 3) {
            cands.push_back(GroupSpec::dihedral(pow(Natural(2), pp.exponent - 1)));
            cands.push_back(GroupSpec::dicyclic(pow(Natural(2), pp.exponent - 2)));
        }
        sylow.push_back(std::move(cands));
    }
    std::vector<std::size_t> idx(sylow.size(), 0);
    bool have_pe = false, have_other = false, pe_mismatch = false;
    Natural pe_value, other_min;
    std::string offender;
    std::uint64_t candidates = 0;
    for (;;) {
        std::vector<GroupSpec> factors;
        bool prime_exponent = true;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const GroupSpec& g = sylow[i][idx[i]];
            factors.push_back(g);
            const auto* ab = g.get_if<AbelianSpec>();
            bool pe = ab && ab->components.begin()->second.all_ones();
            prime_exponent = prime_exponent && pe;
        }
        GroupSpec g = factors.size() == 1 ? factors[0] : GroupSpec::product(std::move(factors));
        Natural v = psi(g, k).value;
        ++candidates;
        if (prime_exponent) {
            if (have_pe && v != pe_value) pe_mismatch = true;
            pe_value = v;
            have_pe = true;
        } else if (!have_other || v < other_min) {
            other_min = v;
            have_other = true;
            offender = g.canonical();
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == sylow[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    bool violated = pe_mismatch || !have_pe || (have_other && other_min <= pe_value);
    std::vector<std::pair<std::string, std::string>> inst = {
        {"n", u64s(n)}, {"k", u64s(k)}, {"mode", "nilpotent"}, {"candidates", u64s(candidates)}};
    if (have_other) inst.emplace_back("closest_nonminimal", offender);
    if (!have_other) other_min = pe_value;
    return make_report(TheoremId::MinPrimeExponent, std::move(inst), pe_value, other_min,
                       violated ? Verdict::Violated : Verdict::HoldsStrict);
}

BoundReport check_q_bound(const GroupSpec& spec, unsigned k) {
    require_non_cyclic(spec);
    Natural n = spec.order();
    Natural q = factorize(n).smallest_prime();
    Natural lhs = pow(q - 1, k) * psi(spec, k).value;
    Natural rhs = psi_cyclic(n, k);
    return make_report(
        TheoremId::QBound,
        {{"group", spec.canonical()}, {"n", n.str()}, {"q", q.str()}, {"k", u64s(k)}}, lhs, rhs,
        verdict_lt(lhs, rhs));
}

BoundReport check_odd_order(const GroupSpec& spec, unsigned k) {
    require_non_cyclic(spec);
    Natural n = spec.order();
    if (n.even()) throw usage_error("odd-order bound needs |G| odd; got " + n.str());
    Natural lhs = pow(Natural(2), k) * psi(spec, k).value;
    Natural rhs = psi_cyclic(n, k);
    return make_report(TheoremId::OddOrder,
                       {{"group", spec.canonical()}, {"n", n.str()}, {"k", u64s(k)}}, lhs, rhs,
                       verdict_lt(lhs, rhs));
}

BoundReport check_cyclic_lower_bound(const Natural& n, unsigned k) {
    if (n < 2) throw usage_error("cyclic lower bound needs n >= 2");
    Factorization fac = factorize(n);
    const Natural& q = fac.smallest_prime();
    const Natural& p = fac.largest_prime();
    Natural lhs = geometric_sum(p, k) * psi_cyclic(n, k);
    Natural rhs = pow(q, k) * pow(n, std::uint64_t(k) + 1);
    // Expected strict >.
    Verdict v = lhs > rhs ? Verdict::HoldsStrict : Verdict::Violated;
    return make_report(TheoremId::CyclicLower,
                       {{"n", n.str()}, {"q", q.str()}, {"p", p.str()}, {"k", u64s(k)}}, lhs, rhs,
                       v);
}

BoundReport check_tightness(const Natural& t, unsigned k) {
    if (t.even()) throw usage_error("tightness example needs odd t; got " + t.str());
    std::map<Natural, Partition> comps;
    comps.emplace(Natural(2), Partition({1, 1}));
    Factorization tfac = factorize(t);
    for (const auto& pp : tfac.factors())
        comps.emplace(pp.prime, Partition({pp.exponent}));
    GroupSpec g = GroupSpec::abelian(std::move(comps));
    Natural n = t * 4;
    Natural lhs = main_bound_coeff_lhs(k) * psi(g, k).value;
    Natural rhs = main_bound_coeff_rhs(k) * psi_cyclic(n, k);
    Verdict v = lhs == rhs ? Verdict::HoldsEquality : Verdict::Violated;
    return make_report(TheoremId::Tightness,
                       {{"t", t.str()}, {"n", n.str()}, {"group", g.canonical()}, {"k", u64s(k)}},
                       lhs, rhs, v);
}

BoundReport check_ineq_lemma_4_3(unsigned a, unsigned b, unsigned k) {
    if (a == 0 || b == 0) throw usage_error("ineq-4-3 grid needs a, b >= 1");
    Natural n = pow(Natural(2), a) * pow(Natural(3), b);
    Natural half = n / 2, third = n / 3;
    Natural lhs = main_bound_coeff_lhs(k) * (psi_cyclic(half, k) + half * pow(third, k));
    Natural rhs = main_bound_coeff_rhs(k) * psi_cyclic(n, k);
    return make_report(TheoremId::IneqLemma43,
                       {{"a", u64s(a)}, {"b", u64s(b)}, {"n", n.str()}, {"k", u64s(k)}}, lhs, rhs,
                       verdict_le(lhs, rhs));
}

BoundReport check_ineq_lemma_4_4(unsigned a, unsigned b, unsigned k) {
    if (a == 0 || b == 0) throw usage_error("ineq-4-4 grid needs a, b >= 1");
    Natural n = pow(Natural(2), a) * pow(Natural(3), b);
    Natural third = n / 3;
    Natural lhs = main_bound_coeff_lhs(k) * (psi_cyclic(third, k) + third * 2 * pow(third, k));
    Natural rhs = main_bound_coeff_rhs(k) * psi_cyclic(n, k);
    return make_report(TheoremId::IneqLemma44,
                       {{"a", u64s(a)}, {"b", u64s(b)}, {"n", n.str()}, {"k", u64s(k)}}, lhs, rhs,
                       verdict_le(lhs, rhs));
}

BoundReport check_ineq_lemma_4_5(const Natural& p, const Natural& q, unsigned k) {
    if (!is_prime(p) || p <= 3) throw usage_error("ineq-4-5 needs a prime p > 3");
    if (!is_prime(q)) throw usage_error("ineq-4-5 needs a prime q >= 2");
    // k-th-power form: roots eliminated, all quantities positive.
    Natural lhs = main_bound_coeff_lhs(k) * geometric_sum(p, k);
    Natural rhs = main_bound_coeff_rhs(k) * pow(q, k) * pow(p, k);
    return make_report(TheoremId::IneqLemma45,
                       {{"p", p.str()}, {"q", q.str()}, {"k", u64s(k)}}, lhs, rhs,
                       verdict_lt(lhs, rhs));
}

BoundReport check_product_inequality(const GroupSpec& a, const GroupSpec& b, unsigned k) {
    OrderSpectrum sa = spectrum(a), sb = spectrum(b);
    Natural lhs = psi_from_spectrum(spectrum_product(sa, sb), k);
    Natural rhs = psi_from_spectrum(sa, k) * psi_from_spectrum(sb, k);
    bool coprime = gcd(sa.group_order, sb.group_order) == 1;
    Verdict v;
    if (coprime)
        v = lhs == rhs ? Verdict::HoldsEquality : Verdict::Violated;
    else
        v = lhs < rhs ? Verdict::HoldsStrict : Verdict::Violated;
    return make_report(TheoremId::ProductIneq,
                       {{"A", a.canonical()},
                        {"B", b.canonical()},
                        {"order_A", sa.group_order.str()},
                        {"order_B", sb.group_order.str()},
                        {"coprime", coprime ? "true" : "false"},
                        {"k", u64s(k)}},
                       lhs, rhs, v);
}

std::vector<BoundReport> check_semidirect_identity(const SemidirectSpec& spec, unsigned k_max,
                                                   bool brute_force) {
    GroupSpec g(spec);
    g.validate();
    OrderSpectrum sp = brute_force ? spectrum_direct(g) : spectrum_semidirect(spec);
    Natural z = spec.kernel_order();
    std::vector<BoundReport> out;
    for (unsigned k = 1; k <= k_max; ++k) {
        Natural psi_g = psi_from_spectrum(sp, k);
        Natural psi_p = psi_cyclic_prime_power(spec.p, spec.r, k);
        Natural psi_z = psi_cyclic(z, k);
        Natural psi_f = psi_cyclic(spec.m, k);
        Natural identity_rhs = psi_p * psi_z + spec.modulus() * (psi_f - psi_z);
        std::vector<std::pair<std::string, std::string>> base = {
            {"group", g.canonical()},
            {"kernel", z.str()},
            {"k", u64s(k)},
            {"route", brute_force ? "bruteforce" : "closed-spectrum"}};
        auto inst1 = base;
        inst1.emplace_back("relation", "identity");
        out.push_back(make_report(TheoremId::SemidirectIdentity, std::move(inst1), psi_g,
                                  identity_rhs,
                                  psi_g == identity_rhs ? Verdict::HoldsEquality
                                                        : Verdict::Violated));
        // Quotient bound: psi_k(G) <= psi_k(P) psi_k(G/P), equality iff the
        // action is trivial.
        Natural quotient_rhs = psi_p * psi_f;
        Verdict qv;
        if (spec.a == 1)
            qv = psi_g == quotient_rhs ? Verdict::HoldsEquality : Verdict::Violated;
        else
            qv = psi_g < quotient_rhs ? Verdict::HoldsStrict : Verdict::Violated;
        auto inst2 = base;
        inst2.emplace_back("relation", "quotient-bound");
        out.push_back(make_report(TheoremId::SemidirectIdentity, std::move(inst2), psi_g,
                                  quotient_rhs, qv));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

namespace {

using Reports = std::vector<BoundReport>;
using Sink = std::function<void(const BoundReport&)>;

std::vector<unsigned> k_values(const SuiteConfig& c, unsigned cap) {
    if (c.k_exact) return {c.k_exact};
    std::vector<unsigned> out;
    for (unsigned k = 1; k <= cap; ++k) out.push_back(k);
    return out;
}

std::vector<std::uint64_t> order_units(const SuiteConfig& c, std::uint64_t def_max,
                                       bool odd_only = false) {
    std::vector<std::uint64_t> out;
    if (c.n_exact) {
        if (!odd_only || c.n_exact % 2 == 1) out.push_back(c.n_exact);
        return out;
    }
    std::uint64_t limit = c.n_max_set ? c.n_max : def_max;
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (!odd_only || n % 2 == 1) out.push_back(n);
    return out;
}

void emit_units(const SuiteConfig& c, std::size_t count,
                const std::function<Reports(std::size_t)>& fn, const Sink& sink) {
    auto buffers = parallel_index_map<Reports>(count, c.workers, fn);
    for (const auto& buf : buffers)
        for (const auto& r : buf) sink(r);
}

void run_main_bound(const SuiteConfig& c, const Sink& sink) {
    auto ns = order_units(c, 500);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (const auto& g : families_of_order(ns[i], c.families, false))
            for (unsigned k : k_values(c, c.k_max)) out.push_back(check_main_bound(g, k));
        return out;
    }, sink);
}

void run_herzog(const SuiteConfig& c, const Sink& sink) {
    auto ns = order_units(c, 500);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (const auto& g : families_of_order(ns[i], c.families, false))
            out.push_back(check_herzog_k1(g));
        return out;
    }, sink);
}

void run_max_cyclic(const SuiteConfig& c, const Sink& sink) {
    auto ns = order_units(c, 500);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (unsigned k : k_values(c, c.k_max))
            out.push_back(check_max_at_cyclic(ns[i], k, c.families));
        return out;
    }, sink);
}

void run_min_prime_exponent(const SuiteConfig& c, const Sink& sink) {
    // Prime-power grid first, then the nilpotent-product reading per order.
    std::uint64_t limit = c.n_exact ? c.n_exact : (c.n_max_set ? c.n_max : 500);
    std::vector<std::pair<std::uint64_t, unsigned>> pm; // (p, m), sorted by p^m then p
    std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, unsigned>>> keyed;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!is_prime_u64(p)) continue;
        std::uint64_t v = p;
        unsigned m = 1;
        while (v <= limit) {
            if (!c.n_exact || v == c.n_exact) keyed.push_back({v, {p, m}});
            if (v > limit / p) break;
            v *= p;
            ++m;
        }
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [v, pm_] : keyed) pm.push_back(pm_);
    emit_units(c, pm.size(), [&](std::size_t i) {
        Reports out;
        for (unsigned k : k_values(c, c.k_max))
            out.push_back(check_min_prime_exponent(Natural(pm[i].first), pm[i].second, k));
        return out;
    }, sink);
    auto ns = order_units(c, 500);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (unsigned k : k_values(c, c.k_max)) out.push_back(check_min_nilpotent(ns[i], k));
        return out;
    }, sink);
}

void run_q_bound(const SuiteConfig& c, const Sink& sink) {
    auto ns = order_units(c, 500);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (const auto& g : families_of_order(ns[i], c.families, false))
            for (unsigned k : k_values(c, c.k_max)) out.push_back(check_q_bound(g, k));
        return out;
    }, sink);
}

void run_odd_order(const SuiteConfig& c, const Sink& sink) {
    auto ns = order_units(c, 500, /*odd_only=*/true);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (const auto& g : families_of_order(ns[i], c.families, false))
            for (unsigned k : k_values(c, c.k_max)) out.push_back(check_odd_order(g, k));
        return out;
    }, sink);
}

void run_cyclic_lower(const SuiteConfig& c, const Sink& sink) {
    auto ns = order_units(c, 500);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (unsigned k : k_values(c, c.k_max))
            out.push_back(check_cyclic_lower_bound(Natural(ns[i]), k));
        return out;
    }, sink);
}

void run_tightness(const SuiteConfig& c, const Sink& sink) {
    std::vector<std::uint64_t> ts;
    for (std::uint64_t t = 1; t <= c.t_max; t += 2) ts.push_back(t);
    emit_units(c, ts.size(), [&](std::size_t i) {
        Reports out;
        for (unsigned k : k_values(c, c.k_max)) out.push_back(check_tightness(Natural(ts[i]), k));
        return out;
    }, sink);
}

void run_grid_43_44(const SuiteConfig& c, TheoremId id, const Sink& sink) {
    emit_units(c, c.ab_max, [&](std::size_t i) {
        unsigned a = static_cast<unsigned>(i) + 1;
        Reports out;
        for (unsigned b = 1; b <= c.ab_max; ++b)
            for (unsigned k : k_values(c, c.k_max))
                out.push_back(id == TheoremId::IneqLemma43 ? check_ineq_lemma_4_3(a, b, k)
                                                           : check_ineq_lemma_4_4(a, b, k));
        return out;
    }, sink);
}

void run_grid_45(const SuiteConfig& c, const Sink& sink) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 5; p <= c.p_max; ++p)
        if (is_prime_u64(p)) ps.push_back(p);
    emit_units(c, ps.size(), [&](std::size_t i) {
        Reports out;
        for (std::uint64_t q : c.q_set)
            for (unsigned k : k_values(c, c.k_max))
                out.push_back(check_ineq_lemma_4_5(Natural(ps[i]), Natural(q), k));
        return out;
    }, sink);
}

void run_product_ineq(const SuiteConfig& c, const Sink& sink) {
    std::uint64_t cap = c.n_max_set ? c.n_max : c.pair_cap;
    // Precompute instances and spectra for all orders that can appear.
    std::uint64_t max_order = cap / 2;
    std::vector<std::vector<GroupSpec>> insts(max_order + 1);
    std::vector<std::vector<OrderSpectrum>> specs(max_order + 1);
    for (std::uint64_t n = 2; n <= max_order; ++n) {
        insts[n] = families_of_order(n, c.families, true);
        for (const auto& g : insts[n]) specs[n].push_back(spectrum(g));
    }
    std::vector<std::uint64_t> nas;
    for (std::uint64_t na = 2; na * na <= cap; ++na) nas.push_back(na);
    emit_units(c, nas.size(), [&](std::size_t u) {
        std::uint64_t na = nas[u];
        Reports out;
        for (std::size_t i = 0; i < insts[na].size(); ++i) {
            for (std::uint64_t nb = na; nb <= cap / na; ++nb) {
                for (std::size_t j = (nb == na ? i : 0); j < insts[nb].size(); ++j) {
                    for (unsigned k : k_values(c, c.pair_k_max))
                        out.push_back(
                            check_product_inequality(insts[na][i], insts[nb][j], k));
                }
            }
        }
        return out;
    }, sink);
}

void run_semidirect(const SuiteConfig& c, const Sink& sink) {
    std::uint64_t cap = c.n_max_set ? c.n_max : c.sd_n_max;
    std::vector<std::uint64_t> ns;
    if (c.n_exact) ns.push_back(c.n_exact);
    else
        for (std::uint64_t n = 6; n <= cap; ++n) ns.push_back(n);
    emit_units(c, ns.size(), [&](std::size_t i) {
        Reports out;
        for (const auto& sd : all_semidirect_of_order(ns[i]))
            for (auto& r : check_semidirect_identity(sd, c.sd_k_max, c.sd_brute_force))
                out.push_back(std::move(r));
        return out;
    }, sink);
}

} // namespace

void run_suite(const SuiteConfig& config, const Sink& sink) {
    std::vector<TheoremId> which = config.theorems;
    if (which.empty())
        for (const auto& t : kTheorems) which.push_back(t.id);
    for (TheoremId id : which) {
        switch (id) {
        case TheoremId::MainBound: run_main_bound(config, sink); break;
        case TheoremId::Herzog: run_herzog(config, sink); break;
        case TheoremId::MaxCyclic: run_max_cyclic(config, sink); break;
        case TheoremId::MinPrimeExponent: run_min_prime_exponent(config, sink); break;
        case TheoremId::QBound: run_q_bound(config, sink); break;
        case TheoremId::OddOrder: run_odd_order(config, sink); break;
        case TheoremId::CyclicLower: run_cyclic_lower(config, sink); break;
        case TheoremId::Tightness: run_tightness(config, sink); break;
        case TheoremId::IneqLemma43: run_grid_43_44(config, TheoremId::IneqLemma43, sink); break;
        case TheoremId::IneqLemma44: run_grid_43_44(config, TheoremId::IneqLemma44, sink); break;
        case TheoremId::IneqLemma45: run_grid_45(config, sink); break;
        case TheoremId::ProductIneq: run_product_ineq(config, sink); break;
        case TheoremId::SemidirectIdentity: run_semidirect(config, sink); break;
        }
    }
}

std::vector<BoundReport> run_suite(const SuiteConfig& config) {
    std::vector<BoundReport> out;
    run_suite(config, [&](const BoundReport& r) { out.push_back(r); });
    return out;
}

bool any_violated(const std::vector<BoundReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const BoundReport& r) { return r.verdict == Verdict::Violated; });
}

} // namespace psik
