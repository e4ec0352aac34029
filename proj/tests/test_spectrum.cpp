#include <doctest.h>

#include <random>

#include "psik/parse.hpp"
#include "psik/search_families.hpp"
#include "psik/spectrum.hpp"

using namespace psik;

namespace {
OrderSpectrum sp(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    OrderSpectrum s;
    Natural total = 0;
    for (auto& [d, c] : pairs) {
        s.counts[Natural(d)] = Natural(c);
        total += c;
    }
    s.group_order = total;
    return s;
}
} // namespace

TEST_CASE("cyclic spectra") {
    CHECK(spectrum_cyclic(1) == sp({{1, 1}}));
    CHECK(spectrum_cyclic(4) == sp({{1, 1}, {2, 1}, {4, 2}}));
    CHECK(spectrum_cyclic(18) == sp({{1, 1}, {2, 1}, {3, 2}, {6, 2}, {9, 6}, {18, 6}}));
}

TEST_CASE("abelian p-group spectra") {
    CHECK(spectrum_abelian_p(2, Partition({1, 1})) == sp({{1, 1}, {2, 3}}));
    CHECK(spectrum_abelian_p(3, Partition({1, 2})) == sp({{1, 1}, {3, 8}, {9, 18}}));
    CHECK(spectrum_abelian_p(2, Partition({1, 2})) == sp({{1, 1}, {2, 3}, {4, 4}}));
}

TEST_CASE("product spectra") {
    CHECK(spectrum_product(sp({{1, 1}, {2, 1}}), sp({{1, 1}, {2, 1}, {4, 2}})) ==
          sp({{1, 1}, {2, 3}, {4, 4}}));
    OrderSpectrum d18 = spectrum_dihedral(18);
    CHECK(spectrum_product(d18, sp({{1, 1}})) == d18);
    CHECK(spectrum_product(spectrum_cyclic(4), spectrum_cyclic(9)) == spectrum_cyclic(36));
}

TEST_CASE("coprime product equals CRT on cyclic groups") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(1, 500);
    int done = 0;
    while (done < 200) {
        std::uint64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(spectrum_product(spectrum_cyclic(a), spectrum_cyclic(b)) == spectrum_cyclic(a * b));
        ++done;
    }
}

TEST_CASE("dihedral spectra") {
    OrderSpectrum s = spectrum_dihedral(18);
    CHECK(s.count(2) == 19);
    CHECK(s.group_order == 36);
    CHECK(s == spectrum_bruteforce(build_cayley(parse_spec("D18"))));
    CHECK(spectrum_dihedral(1) == sp({{1, 1}, {2, 1}}));
    CHECK(spectrum_dihedral(3) == sp({{1, 1}, {2, 3}, {3, 2}}));
}

TEST_CASE("dicyclic spectra") {
    CHECK(spectrum_dicyclic(2) == sp({{1, 1}, {2, 1}, {4, 6}}));
    CHECK(spectrum_dicyclic(3) == sp({{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}));
    CHECK(spectrum_dicyclic(2) == spectrum_bruteforce(build_cayley(parse_spec("Dic2"))));
    CHECK(spectrum_dicyclic(3) == spectrum_bruteforce(build_cayley(parse_spec("Dic3"))));
    for (std::uint64_t m = 2; m <= 50; ++m) {
        OrderSpectrum s = spectrum_dicyclic(m);
        Natural total = 0;
        for (auto& [d, c] : s.counts) total += c;
        CHECK(total == 4 * m);
    }
}

TEST_CASE("semidirect spectra follow the trivial-or-free action rules") {
    SemidirectSpec s1{7, 1, 3, 2};
    CHECK(spectrum_semidirect(s1) == sp({{1, 1}, {3, 14}, {7, 6}}));
    CHECK(spectrum_semidirect(s1) == spectrum_bruteforce(build_cayley(GroupSpec(s1))));

    SemidirectSpec trivial{7, 1, 3, 1};
    CHECK(spectrum_semidirect(trivial) == spectrum_cyclic(21));

    SemidirectSpec s2{5, 1, 4, 2};
    CHECK(spectrum_semidirect(s2) == sp({{1, 1}, {2, 5}, {4, 10}, {5, 4}}));
    CHECK(spectrum_semidirect(s2) == spectrum_bruteforce(build_cayley(GroupSpec(s2))));
}

TEST_CASE("semidirect action is trivial or fixed-point-free") {
    // For x outside the kernel, a^x - 1 must be a unit mod p^r.
    for (std::uint64_t n = 6; n <= 400; ++n) {
        for (const auto& sd : all_semidirect_of_order(n)) {
            Natural q = sd.modulus();
            std::uint64_t d = sd.action_order().to_u64();
            std::uint64_t m = sd.m.to_u64();
            for (std::uint64_t x = 0; x < m; ++x) {
                if (x % d == 0) continue; // kernel
                Natural ax = powmod(sd.a, Natural(x), q);
                REQUIRE(gcd(ax - 1, q) == 1);
            }
        }
    }
}

TEST_CASE("dispatcher routes families") {
    CHECK(spectrum(parse_spec("C36")) == spectrum_cyclic(36));
    CHECK(spectrum(parse_spec("C4*C3*C3")) ==
          sp({{1, 1}, {2, 1}, {3, 8}, {4, 2}, {6, 8}, {12, 16}}));
    CHECK(spectrum(parse_spec("A[2:2;3:1,1]")) == spectrum(parse_spec("C4*C3*C3")));
}

TEST_CASE("oracle agreement across routes for small instances") {
    // spectrum(spec) == brute force over the materialized table == direct
    // element-order enumeration, for every family instance of order <= 200.
    for (std::uint64_t n = 2; n <= 200; ++n) {
        for (const auto& g : families_of_order(n)) {
            OrderSpectrum closed = spectrum(g);
            closed.validate();
            REQUIRE(closed == spectrum_bruteforce(build_cayley(g)));
            REQUIRE(closed == spectrum_direct(g));
        }
    }
}

TEST_CASE("oracle agreement on sampled larger instances") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::uint64_t> dist(201, 1200);
    for (int i = 0; i < 12; ++i) {
        std::uint64_t n = dist(rng);
        for (const auto& g : families_of_order(n)) {
            OrderSpectrum closed = spectrum(g);
            closed.validate();
            REQUIRE(closed == spectrum_direct(g));
        }
    }
    // materialized tables at larger orders
    std::uniform_int_distribution<std::uint64_t> big(1200, 2000);
    for (int i = 0; i < 3; ++i) {
        std::uint64_t n = big(rng);
        for (const auto& g : families_of_order(n))
            REQUIRE(spectrum(g) == spectrum_bruteforce(build_cayley(g)));
    }
}

TEST_CASE("order-class sizes are multiples of phi(order) on built-ins") {
    for (std::uint64_t n : {12, 36, 60, 96, 100, 147, 200}) {
        for (const auto& g : families_of_order(n)) {
            OrderSpectrum s = spectrum(g);
            for (const auto& [d, c] : s.counts) {
                Natural phi = euler_phi(d);
                CAPTURE(g.canonical());
                REQUIRE(c % phi == 0); // elements of order d split into cyclic subgroups
            }
        }
    }
}

TEST_CASE("spectrum of user cayley table") {
    CayleyTable q8 = build_cayley(parse_spec("Dic2"));
    CHECK(spectrum_bruteforce(q8) == sp({{1, 1}, {2, 1}, {4, 6}}));
    CayleyTable z4 = build_cayley(parse_spec("C4"));
    CHECK(spectrum_bruteforce(z4) == sp({{1, 1}, {2, 1}, {4, 2}}));
}

TEST_CASE("spectrum validate rejects inconsistencies") {
    OrderSpectrum bad = sp({{1, 1}, {3, 2}});
    bad.group_order = 5; // 3 does not divide 5
    CHECK_THROWS_AS(bad.validate(), internal_error);
    OrderSpectrum bad2 = sp({{1, 2}, {2, 2}});
    CHECK_THROWS_AS(bad2.validate(), internal_error);
}
