#include "psik/psi.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace psik {

namespace {

std::atomic<unsigned> g_max_k{64};
std::atomic<bool> g_cross_check{false};

void require_k(unsigned k) {
    if (k == 0) throw usage_error("k must be >= 1 (psi_0 is just |G|)");
    unsigned limit = g_max_k.load(std::memory_order_relaxed);
    if (k > limit)
        throw resource_error("k = " + std::to_string(k) + " exceeds the configured maximum " +
                             std::to_string(limit));
}

// Memo for the abelian recursions. Keys recur heavily across order scans
// (every n = 4t hits {2:[1,1]}), so this is shared and thread-safe; inserts
// of identical keys are idempotent by construction.
struct MemoKey {
    Natural p;
    std::vector<unsigned> parts;
    unsigned k;
    bool saha;
    bool operator<(const MemoKey& o) const {
        if (p != o.p) return p < o.p;
        if (parts != o.parts) return parts < o.parts;
        if (k != o.k) return k < o.k;
        return saha < o.saha;
    }
};

class Memo {
public:
    std::optional<Natural> find(const MemoKey& key) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void store(MemoKey key, const Natural& value) {
        std::unique_lock lock(mu_);
        map_.emplace(std::move(key), value);
    }

private:
    mutable std::shared_mutex mu_;
    std::map<MemoKey, Natural> map_;
};

Memo& memo() {
    static Memo m;
    return m;
}

} // namespace

unsigned max_k() { return g_max_k.load(std::memory_order_relaxed); }
void set_max_k(unsigned k) {
    if (k == 0) throw usage_error("max k must be >= 1");
    g_max_k.store(k, std::memory_order_relaxed);
}

bool cross_check_enabled() { return g_cross_check.load(std::memory_order_relaxed); }
void set_cross_check(bool enabled) { g_cross_check.store(enabled, std::memory_order_relaxed); }

Natural psi_from_spectrum(const OrderSpectrum& s, unsigned k) {
    require_k(k);
    Natural acc = 0;
    for (const auto& [d, c] : s.counts) acc += c * pow(d, k);
    return acc;
}

Natural psi_cyclic_prime_power(const Natural& p, unsigned r, unsigned k) {
    require_k(k);
    if (r == 0) return 1;
    std::uint64_t rr = r, kk = k;
    Natural num = pow(p, kk * rr + kk + rr + 1) - pow(p, kk * rr + kk + rr) + pow(p, kk) - 1;
    return exact_div(num, pow(p, kk + 1) - 1);
}

Natural psi_homogeneous(const Natural& p, unsigned r, unsigned s, unsigned k) {
    require_k(k);
    if (r == 0 || s == 0) throw usage_error("psi_homogeneous needs r >= 1 and s >= 1");
    std::uint64_t rr = r, ss = s, kk = k;
    Natural num =
        pow(p, ss * rr + ss + rr * kk + kk) - pow(p, ss * rr + kk * rr + kk) + pow(p, kk) - 1;
    return exact_div(num, pow(p, ss + kk) - 1);
}

Natural psi_abelian_recurrence(const Natural& p, const Partition& lambda, unsigned k) {
    require_k(k);
    if (lambda.count() == 1) return psi_cyclic_prime_power(p, lambda.smallest(), k);
    if (lambda.all_equal())
        return psi_homogeneous(p, lambda.smallest(), static_cast<unsigned>(lambda.count()), k);

    MemoKey key{p, lambda.parts(), k, false};
    if (auto hit = memo().find(key)) return *hit;

    unsigned r1 = lambda.smallest();
    unsigned t = static_cast<unsigned>(lambda.count());
    Natural tail = psi_abelian_recurrence(p, lambda.rest(), k);
    Natural value = psi_homogeneous(p, r1, t, k) +
                    pow(p, r1) * (tail - psi_homogeneous(p, r1, t - 1, k));
    memo().store(std::move(key), value);
    return value;
}

Natural psi_abelian_saha(const Natural& p, const Partition& lambda, unsigned k) {
    require_k(k);
    if (lambda.count() == 1) return psi_cyclic_prime_power(p, lambda.smallest(), k);

    MemoKey key{p, lambda.parts(), k, true};
    if (auto hit = memo().find(key)) return *hit;

    // G = Z_{p^r} x H with r the smallest part; then exp(H) = p^(largest) >= p^r.
    unsigned r = lambda.smallest();
    Partition rest = lambda.rest();
    Natural psi_h = psi_abelian_saha(p, rest, k);
    Natural pk_minus = pow(p, k) - 1;
    Natural value;
    if (r == 1) {
        value = p * psi_h + (p - 1) * pk_minus;
    } else {
        OrderSpectrum sp_h = spectrum_abelian_p(p, rest);
        value = pow(p, r) * psi_h + (p - 1) * pk_minus;
        for (unsigned i = 2; i <= r; ++i) {
            Natural pki = pow(p, std::uint64_t(k) * i);
            Natural inner = pki - 1;
            for (unsigned j = 1; j < i; ++j)
                inner += (pki - pow(p, std::uint64_t(k) * j)) * sp_h.count(pow(p, j));
            value += (pow(p, i) - pow(p, i - 1)) * inner;
        }
    }
    memo().store(std::move(key), value);
    return value;
}

Natural psi_cyclic(const Natural& n, unsigned k) {
    require_k(k);
    if (n.is_zero()) throw validation_error("cyclic group order must be >= 1");
    Natural acc = 1;
    Factorization fac = factorize(n);
    for (const auto& pp : fac.factors())
        acc *= psi_cyclic_prime_power(pp.prime, pp.exponent, k);
    return acc;
}

namespace {

// Collect direct-product leaves; nullopt when the tree mixes in factors that
// have no standalone psi (never happens for the built-in grammar).
std::optional<Natural> psi_product_coprime(const ProductSpec& s, unsigned k) {
    std::vector<Natural> orders;
    orders.reserve(s.factors.size());
    for (const auto& f : s.factors) orders.push_back(f.order());
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
            if (gcd(orders[i], orders[j]) != 1) return std::nullopt;
    Natural acc = 1;
    for (const auto& f : s.factors) acc *= psi(f, k).value;
    return acc;
}

} // namespace

std::optional<Natural> psi_multiplicative(const GroupSpec& spec, unsigned k) {
    if (const auto* c = spec.get_if<CyclicSpec>()) return psi_cyclic(c->n, k);
    if (const auto* a = spec.get_if<AbelianSpec>()) {
        Natural acc = 1;
        for (const auto& [p, lam] : a->components) acc *= psi_abelian_recurrence(p, lam, k);
        return acc;
    }
    if (const auto* pr = spec.get_if<ProductSpec>()) return psi_product_coprime(*pr, k);
    return std::nullopt;
}

PsiValue psi(const GroupSpec& spec, unsigned k) {
    require_k(k);
    PsiValue out;
    out.k = k;
    out.group_order = spec.order();

    if (const auto* c = spec.get_if<CyclicSpec>()) {
        out.value = psi_cyclic(c->n, k);
        out.route = "cyclic-closed-form";
    } else if (const auto* a = spec.get_if<AbelianSpec>()) {
        out.value = *psi_multiplicative(spec, k);
        out.route = a->components.size() == 1 ? "abelian-recurrence" : "multiplicative";
    } else if (const auto* d = spec.get_if<DihedralSpec>()) {
        // psi_k(D_m) = psi_k(Z_m) + m 2^k: the m reflections all have order 2.
        out.value = psi_cyclic(d->m, k) + d->m * pow(Natural(2), k);
        out.route = "dihedral-identity";
    } else if (const auto* dc = spec.get_if<DicyclicSpec>()) {
        out.value = psi_cyclic(dc->m * 2, k) + dc->m * 2 * pow(Natural(4), k);
        out.route = "dicyclic-identity";
    } else if (const auto* sd = spec.get_if<SemidirectSpec>()) {
        GroupSpec(*sd).validate();
        // psi_k(G) = psi_k(P) psi_k(Z) + |P| (psi_k(F) - psi_k(Z)).
        Natural psi_p = psi_cyclic_prime_power(sd->p, sd->r, k);
        Natural psi_z = psi_cyclic(sd->kernel_order(), k);
        Natural psi_f = psi_cyclic(sd->m, k);
        out.value = psi_p * psi_z + sd->modulus() * (psi_f - psi_z);
        out.route = "semidirect-identity";
    } else if (spec.get_if<ProductSpec>()) {
        if (auto v = psi_multiplicative(spec, k)) {
            out.value = *v;
            out.route = "multiplicative";
        } else {
            out.value = psi_from_spectrum(spectrum(spec), k);
            out.route = "spectrum-convolution";
        }
    } else {
        out.value = psi_from_spectrum(spectrum(spec), k);
        out.route = "cayley-bruteforce";
    }

    if (cross_check_enabled()) {
        Natural audit = psi_from_spectrum(spectrum(spec), k);
        if (audit != out.value)
            throw internal_error("psi route '" + out.route + "' disagrees with spectrum route for " +
                                 spec.canonical() + ", k=" + std::to_string(k) + ": " +
                                 out.value.str() + " vs " + audit.str());
    }
    return out;
}

} // namespace psik
