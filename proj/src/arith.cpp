#include "psik/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <numeric>
#include <ostream>

namespace psik {

namespace mp = boost::multiprecision;

Natural Natural::from_decimal(std::string_view s) {
    if (s.empty()) throw std::domain_error("empty decimal string");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::domain_error("not a decimal digit string: '" + std::string(s) + "'");
    }
    return Natural(cpp_int(std::string(s)));
}

Natural Natural::from_cpp(cpp_int v) {
    if (v < 0) throw std::domain_error("Natural from negative cpp_int");
    return Natural(std::move(v));
}

bool Natural::fits_u64() const {
    static const cpp_int kMax = cpp_int(std::numeric_limits<std::uint64_t>::max());
    return v_ <= kMax;
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw resource_error("value does not fit in 64 bits: " + str());
    return static_cast<std::uint64_t>(v_);
}

Natural& Natural::operator-=(const Natural& o) {
    if (v_ < o.v_)
        throw std::domain_error("Natural underflow: " + str() + " - " + o.str());
    v_ -= o.v_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Natural& Natural::operator%=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("modulo by zero");
    v_ %= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_; }

Natural pow(const Natural& base, std::uint64_t exp) {
    if (base.is_zero() && exp == 0)
        throw std::domain_error("0^0 is undefined here");
    if (exp == 0) return 1;
    cpp_int acc = 1;
    cpp_int b = base.raw();
    std::uint64_t e = exp;
    while (e) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return Natural::from_cpp(std::move(acc));
}

Natural pow(const Natural& base, const Natural& exp) { return pow(base, exp.to_u64()); }

Natural powmod(const Natural& base, const Natural& exp, const Natural& m) {
    if (m.is_zero()) throw std::domain_error("powmod modulus zero");
    return Natural::from_cpp(mp::powm(base.raw(), exp.raw(), m.raw()));
}

Natural gcd(const Natural& a, const Natural& b) {
    return Natural::from_cpp(mp::gcd(a.raw(), b.raw()));
}

Natural lcm(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    return Natural::from_cpp(mp::lcm(a.raw(), b.raw()));
}

Natural exact_div(const Natural& num, const Natural& den) {
    if (den.is_zero()) throw std::domain_error("exact_div by zero");
    cpp_int q, r;
    mp::divide_qr(num.raw(), den.raw(), q, r);
    if (!r.is_zero())
        throw internal_error("exact_div: " + den.str() + " does not divide " + num.str());
    return Natural::from_cpp(std::move(q));
}

Natural geometric_sum(const Natural& p, unsigned k) {
    cpp_int acc = 1;
    cpp_int term = 1;
    for (unsigned i = 1; i <= k; ++i) {
        term *= p.raw();
        acc += term;
    }
    return Natural::from_cpp(std::move(acc));
}

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].exponent == 0)
            throw validation_error("factorization exponent must be >= 1");
        if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime))
            throw validation_error("factorization primes must be strictly increasing");
    }
}

Natural Factorization::value() const {
    Natural v = 1;
    for (const auto& f : factors_) v *= pow(f.prime, f.exponent);
    return v;
}

const Natural& Factorization::smallest_prime() const {
    if (factors_.empty()) throw std::domain_error("factorization of 1 has no prime divisors");
    return factors_.front().prime;
}

const Natural& Factorization::largest_prime() const {
    if (factors_.empty()) throw std::domain_error("factorization of 1 has no prime divisors");
    return factors_.back().prime;
}

// ---------------------------------------------------------------------------
// Primality and factorization
// ---------------------------------------------------------------------------

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return acc;
}

// Strong probable-prime test to base a.
bool mr_composite_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Deterministic for all n < 2^64 with this base set.
constexpr std::array<std::uint64_t, 12> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                sieve[static_cast<std::size_t>(j)] = false;
        }
        return out;
    }();
    return primes;
}

std::uint64_t pollard_brent_u64(std::uint64_t n) {
    // n odd composite, no factor below 10^6.
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                std::uint64_t ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // Backtrack one step at a time.
                    d = 1;
                    do {
                        ys = (mulmod_u64(ys, ys, n) + c) % n;
                        d = std::gcd(x > ys ? x - ys : ys - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

cpp_int pollard_brent_big(const cpp_int& n) {
    for (cpp_int c = 1;; ++c) {
        cpp_int x = 2, y = 2, d = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (y * y + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                cpp_int q = 1;
                cpp_int ys = y;
                int lim = std::min(64, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * mp::abs(x - y) % n;
                }
                d = mp::gcd(q, n);
                if (d == n) {
                    d = 1;
                    do {
                        ys = (ys * ys + c) % n;
                        d = mp::gcd(mp::abs(x - ys), n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

bool mr_composite_big(const cpp_int& n, const cpp_int& a, const cpp_int& d, int s) {
    cpp_int x = mp::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

void factor_u64_into(std::uint64_t n, std::vector<std::pair<std::uint64_t, unsigned>>& out) {
    for (std::uint32_t p : small_primes()) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(n, 1);
        return;
    }
    std::uint64_t d = pollard_brent_u64(n);
    std::vector<std::pair<std::uint64_t, unsigned>> sub;
    factor_u64_into(d, sub);
    factor_u64_into(n / d, sub);
    for (auto& [p, e] : sub) {
        auto it = std::find_if(out.begin(), out.end(), [&](auto& pe) { return pe.first == p; });
        if (it != out.end()) it->second += e;
        else out.emplace_back(p, e);
    }
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : kMrBases)
        if (mr_composite_u64(n, a, d, s)) return false;
    return true;
}

bool is_prime(const Natural& n) {
    if (n.fits_u64()) return is_prime_u64(n.to_u64());
    const cpp_int& v = n.raw();
    for (std::uint32_t p : small_primes())
        if (v % p == 0) return false;
    cpp_int d = v - 1;
    int s = 0;
    while (!mp::bit_test(d, 0)) { d >>= 1; ++s; }
    // Fixed wide base set; probable prime beyond the deterministic 64-bit range.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97})
        if (mr_composite_big(v, cpp_int(a), d, s)) return false;
    return true;
}

Factorization factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    std::vector<std::pair<std::uint64_t, unsigned>> raw;
    if (n > 1) factor_u64_into(n, raw);
    std::sort(raw.begin(), raw.end());
    std::vector<PrimePower> out;
    out.reserve(raw.size());
    for (auto& [p, e] : raw) out.push_back({Natural(p), e});
    return Factorization(std::move(out));
}

Factorization factorize(const Natural& n) {
    if (n.is_zero()) throw std::domain_error("factorize(0)");
    if (n.fits_u64()) return factorize_u64(n.to_u64());

    cpp_int rest = n.raw();
    std::vector<PrimePower> out;
    for (std::uint32_t p : small_primes()) {
        if (rest % p == 0) {
            unsigned e = 0;
            while (rest % p == 0) { rest /= p; ++e; }
            out.push_back({Natural(p), e});
        }
    }
    // Large cofactor: split with rho until prime pieces remain.
    std::vector<cpp_int> pending;
    if (rest > 1) pending.push_back(rest);
    std::vector<cpp_int> primes_found;
    while (!pending.empty()) {
        cpp_int c = pending.back();
        pending.pop_back();
        if (is_prime(Natural::from_cpp(c))) {
            primes_found.push_back(c);
            continue;
        }
        cpp_int d = c <= std::numeric_limits<std::uint64_t>::max()
                        ? cpp_int(pollard_brent_u64(static_cast<std::uint64_t>(c)))
                        : pollard_brent_big(c);
        pending.push_back(d);
        pending.push_back(c / d);
    }
    std::sort(primes_found.begin(), primes_found.end());
    for (std::size_t i = 0; i < primes_found.size();) {
        std::size_t j = i;
        while (j < primes_found.size() && primes_found[j] == primes_found[i]) ++j;
        out.push_back({Natural::from_cpp(primes_found[i]), static_cast<unsigned>(j - i)});
        i = j;
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return Factorization(std::move(out));
}

Natural euler_phi(const Factorization& f) {
    Natural v = 1;
    for (const auto& pp : f.factors())
        v *= pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    return v;
}

Natural euler_phi(const Natural& n) {
    if (n.is_zero()) throw std::domain_error("euler_phi(0)");
    return euler_phi(factorize(n));
}

std::vector<std::pair<Natural, Natural>> divisors_with_phi(const Factorization& f) {
    std::vector<std::pair<Natural, Natural>> out = {{Natural(1), Natural(1)}};
    for (const auto& pp : f.factors()) {
        std::size_t base = out.size();
        Natural pk = 1;
        Natural phi = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            phi = (e == 1) ? pp.prime - 1 : phi * pp.prime;
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i)
                out.emplace_back(out[i].first * pk, out[i].second * phi);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Natural> divisors(const Factorization& f) {
    std::vector<Natural> out;
    for (auto& [d, phi] : divisors_with_phi(f)) out.push_back(d);
    return out;
}

Natural multiplicative_order(const Natural& a, const Natural& m, const Natural& order_divides) {
    if (gcd(a, m) != 1) throw std::domain_error("multiplicative_order: gcd(a, m) != 1");
    if (powmod(a, order_divides, m) != 1)
        throw std::domain_error("multiplicative_order: given exponent is not a multiple of the order");
    Natural ord = order_divides;
    Factorization fac = factorize(order_divides);
    for (const auto& pp : fac.factors()) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            Natural candidate = ord / pp.prime;
            if (powmod(a, candidate, m) == 1) ord = candidate;
            else break;
        }
    }
    return ord;
}

Cmp compare_ratio(const Natural& lhs_num, const Natural& lhs_den,
                  const Natural& rhs_num, const Natural& rhs_den) {
    if (lhs_den.is_zero() || rhs_den.is_zero())
        throw std::domain_error("compare_cross: zero denominator");
    Natural a = lhs_num * rhs_den;
    Natural b = rhs_num * lhs_den;
    if (a < b) return Cmp::LT;
    if (a == b) return Cmp::EQ;
    return Cmp::GT;
}

Cmp compare_cross(const ExactRatioComparison& c) {
    return compare_ratio(c.lhs_num, c.lhs_den, c.rhs_num, c.rhs_den);
}

} // namespace psik
