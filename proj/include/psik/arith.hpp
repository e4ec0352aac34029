#pragma once

// Exact natural-number arithmetic. Every order, count, psi value and bound
// comparison in this library is an integer; there is no floating point in
// any verdict path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psik/errors.hpp"

namespace psik {

using boost::multiprecision::cpp_int;

/// Arbitrary-precision non-negative integer.
///
/// Closed under addition, multiplication and exponentiation. Subtraction is
/// checked: `a - b` with `b > a` throws std::domain_error instead of
/// wrapping or going negative.
class Natural {
public:
    Natural() : v_(0) {}
    Natural(int v) : v_(v) {
        if (v < 0) throw std::domain_error("Natural from negative int");
    }
    Natural(unsigned v) : v_(v) {}
    Natural(long long v) : v_(v) {
        if (v < 0) throw std::domain_error("Natural from negative value");
    }
    Natural(unsigned long v) : v_(v) {}
    Natural(unsigned long long v) : v_(v) {}

    /// Parse a decimal string. Rejects signs, whitespace and junk.
    static Natural from_decimal(std::string_view s);

    /// Wrap a cpp_int, rejecting negatives.
    static Natural from_cpp(cpp_int v);

    const cpp_int& raw() const { return v_; }

    std::string str() const { return v_.str(); }

    bool is_zero() const { return v_.is_zero(); }
    bool odd() const { return boost::multiprecision::bit_test(v_, 0); }
    bool even() const { return !odd(); }

    bool fits_u64() const;
    /// Narrow to uint64_t; throws resource_error if the value does not fit.
    std::uint64_t to_u64() const;

    Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
    Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
    Natural& operator-=(const Natural& o);
    Natural& operator/=(const Natural& o);
    Natural& operator%=(const Natural& o);

    friend Natural operator+(Natural a, const Natural& b) { a += b; return a; }
    friend Natural operator*(Natural a, const Natural& b) { a *= b; return a; }
    friend Natural operator-(Natural a, const Natural& b) { a -= b; return a; }
    friend Natural operator/(Natural a, const Natural& b) { a /= b; return a; }
    friend Natural operator%(Natural a, const Natural& b) { a %= b; return a; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Natural& a, const Natural& b) { return a.v_ != b.v_; }
    friend bool operator<(const Natural& a, const Natural& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Natural& a, const Natural& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Natural& a, const Natural& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Natural& a, const Natural& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    explicit Natural(cpp_int v) : v_(std::move(v)) {}
    cpp_int v_;
};

/// base^exp. 0^0 is rejected (throws std::domain_error).
Natural pow(const Natural& base, std::uint64_t exp);
Natural pow(const Natural& base, const Natural& exp);

/// base^exp mod m, m >= 1.
Natural powmod(const Natural& base, const Natural& exp, const Natural& m);

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

/// num / den, throwing internal_error unless den divides num exactly.
/// Used by closed-form evaluators whose quotients are provably integral;
/// a nonzero remainder means the formula was transcribed wrong.
Natural exact_div(const Natural& num, const Natural& den);

/// 1 + p + p^2 + ... + p^k.
Natural geometric_sum(const Natural& p, unsigned k);

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    bool operator==(const PrimePower&) const = default;
};

/// Ordered prime factorization: primes strictly increasing, exponents >= 1,
/// empty for n = 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    /// Product of prime^exponent.
    Natural value() const;

    /// Smallest / largest prime divisor; throws std::domain_error when empty.
    const Natural& smallest_prime() const;
    const Natural& largest_prime() const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<PrimePower> factors_;
};

/// Primality test. Deterministic Miller-Rabin for values below 2^64;
/// strong probable-prime test with a fixed wide base set above that.
bool is_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

/// Factor n >= 1. Trial division by primes up to 10^6, then Brent's rho on
/// any remaining cofactor. n = 0 throws std::domain_error.
Factorization factorize(const Natural& n);
Factorization factorize_u64(std::uint64_t n);

/// Euler's totient, phi(1) = 1.
Natural euler_phi(const Natural& n);
Natural euler_phi(const Factorization& f);

/// All divisors of the factored value, ascending, paired with phi(divisor).
std::vector<std::pair<Natural, Natural>> divisors_with_phi(const Factorization& f);

/// All divisors, ascending.
std::vector<Natural> divisors(const Factorization& f);

/// Multiplicative order of a modulo m, for gcd(a, m) = 1. `order_divides`
/// must be a multiple of the true order (e.g. phi(m) or any known exponent).
Natural multiplicative_order(const Natural& a, const Natural& m, const Natural& order_divides);

enum class Cmp { LT, EQ, GT };

/// Two fractions to be compared without division. Denominators nonzero.
struct ExactRatioComparison {
    Natural lhs_num, lhs_den, rhs_num, rhs_den;
};

/// Verdict of lhs_num/lhs_den vs rhs_num/rhs_den by cross-multiplication.
Cmp compare_cross(const ExactRatioComparison& c);
Cmp compare_ratio(const Natural& lhs_num, const Natural& lhs_den,
                  const Natural& rhs_num, const Natural& rhs_den);

} // namespace psik
