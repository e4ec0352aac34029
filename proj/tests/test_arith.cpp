#include <doctest.h>

#include <random>

#include "psik/arith.hpp"

using namespace psik;

namespace {
Factorization fac(std::initializer_list<std::pair<std::uint64_t, unsigned>> fs) {
    std::vector<PrimePower> v;
    for (auto& [p, e] : fs) v.push_back({Natural(p), e});
    return Factorization(v);
}
} // namespace

TEST_CASE("factorize known values") {
    CHECK(factorize(Natural(36)) == fac({{2, 2}, {3, 2}}));
    CHECK(factorize(Natural(1)).empty());
    CHECK(factorize(Natural(60)) == fac({{2, 2}, {3, 1}, {5, 1}})); // 4t, t = 15
    CHECK(factorize(Natural(97)) == fac({{97, 1}}));
    CHECK_THROWS_AS(factorize(Natural(0)), std::domain_error);
}

TEST_CASE("factorize reconstructs n up to 1e5") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        Factorization f = factorize_u64(n);
        REQUIRE(f.value() == Natural(n));
    }
}

TEST_CASE("factorize large semiprime via rho") {
    Natural a(1000000007), b(1000000009);
    Factorization f = factorize(a * b);
    REQUIRE(f.size() == 2);
    CHECK(f.factors()[0].prime == a);
    CHECK(f.factors()[1].prime == b);
}

TEST_CASE("primality") {
    CHECK(is_prime(Natural(2)));
    CHECK(is_prime(Natural(97)));
    CHECK_FALSE(is_prime(Natural(1)));
    CHECK_FALSE(is_prime(Natural(561)));  // Carmichael
    CHECK_FALSE(is_prime(Natural(1000000007ULL * 1000000007ULL)));
    CHECK(is_prime(Natural((std::uint64_t(1) << 61) - 1)));
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(Natural(1)) == 1);
    CHECK(euler_phi(Natural(9)) == 6);
    CHECK(euler_phi(Natural(36)) == 12);

    // phi(36) by direct gcd enumeration, independently of the formula
    unsigned units = 0;
    for (unsigned x = 1; x <= 36; ++x)
        if (gcd(Natural(x), Natural(36)) == 1) ++units;
    CHECK(euler_phi(Natural(36)) == units);
}

TEST_CASE("phi multiplicativity on coprime pairs") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Natural a(dist(rng)), b(dist(rng));
        if (gcd(a, b) != 1) continue;
        CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    }
}

TEST_CASE("phi lower bound p phi(n) >= (q-1) n") {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        Factorization f = factorize_u64(n);
        REQUIRE(f.largest_prime() * euler_phi(f) >= (f.smallest_prime() - 1) * Natural(n));
    }
}

TEST_CASE("compare_cross examples") {
    CHECK(compare_cross({7, 11, 7, 11}) == Cmp::EQ);
    CHECK(compare_cross({49, 77, 7, 11}) == Cmp::EQ);
    CHECK(compare_cross({219, 1, 275, 1}) == Cmp::LT);
    CHECK_THROWS_AS(compare_cross({1, 0, 1, 1}), std::domain_error);
}

TEST_CASE("compare_cross antisymmetric and transitive") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1 << 20);
    auto flip = [](Cmp c) { return c == Cmp::LT ? Cmp::GT : c == Cmp::GT ? Cmp::LT : Cmp::EQ; };
    for (int i = 0; i < 2000; ++i) {
        Natural a(dist(rng)), b(dist(rng)), c(dist(rng)), d(dist(rng)), e(dist(rng)), f(dist(rng));
        Cmp ab = compare_ratio(a, b, c, d);
        CHECK(compare_ratio(c, d, a, b) == flip(ab));
        Cmp bc = compare_ratio(c, d, e, f);
        if (ab == bc) CHECK(compare_ratio(a, b, e, f) == ab); // transitivity on chains
    }
}

TEST_CASE("pow") {
    CHECK(pow(Natural(2), std::uint64_t(10)) == 1024);
    CHECK(pow(Natural(3), std::uint64_t(0)) == 1);
    CHECK(pow(Natural(5), std::uint64_t(7)) == 78125);
    CHECK_THROWS_AS(pow(Natural(0), std::uint64_t(0)), std::domain_error);
    CHECK(pow(Natural(0), std::uint64_t(3)) == 0);
}

TEST_CASE("natural subtraction is checked") {
    Natural a(5), b(7);
    CHECK(b - a == 2);
    CHECK_THROWS_AS(a - b, std::domain_error);
}

TEST_CASE("exact_div") {
    CHECK(exact_div(Natural(33), Natural(3)) == 11);
    CHECK_THROWS_AS(exact_div(Natural(34), Natural(3)), internal_error);
    CHECK_THROWS_AS(exact_div(Natural(34), Natural(0)), std::domain_error);
}

TEST_CASE("decimal round trip") {
    Natural big = pow(Natural(10), std::uint64_t(50)) + 12345;
    CHECK(Natural::from_decimal(big.str()) == big);
    CHECK_THROWS_AS(Natural::from_decimal("12x"), std::domain_error);
    CHECK_THROWS_AS(Natural::from_decimal(""), std::domain_error);
    CHECK_THROWS_AS(Natural::from_decimal("-3"), std::domain_error);
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(Natural(2), Natural(7), Natural(6)) == 3);
    CHECK(multiplicative_order(Natural(3), Natural(7), Natural(6)) == 6);
    CHECK(multiplicative_order(Natural(1), Natural(49), Natural(42)) == 1);
}

TEST_CASE("divisors with phi") {
    auto dv = divisors_with_phi(factorize(Natural(12)));
    REQUIRE(dv.size() == 6);
    CHECK(dv.front().first == 1);
    CHECK(dv.back().first == 12);
    Natural total = 0;
    for (auto& [d, phi] : dv) total += phi;
    CHECK(total == 12); // sum of phi over divisors is n
}

TEST_CASE("geometric sum") {
    CHECK(geometric_sum(Natural(3), 2) == 13);
    CHECK(geometric_sum(Natural(5), 0) == 1);
}
