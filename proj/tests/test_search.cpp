#include <doctest.h>

#include "psik/parse.hpp"
#include "psik/search.hpp"

using namespace psik;

TEST_CASE("family enumeration") {
    auto fams = families_of_order(8);
    REQUIRE(fams.size() == 5);
    CHECK(fams[0].canonical() == "C8");
    CHECK(fams[1].canonical() == "A[2:1,1,1]");
    CHECK(fams[2].canonical() == "A[2:1,2]");
    CHECK(fams[3].canonical() == "D4");
    CHECK(fams[4].canonical() == "Dic2");

    auto p7 = families_of_order(7);
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].canonical() == "C7");

    // n = 21 admits the nontrivial action of order 3 on Z_7.
    bool found_sd = false;
    for (const auto& g : families_of_order(21))
        if (const auto* sd = g.get_if<SemidirectSpec>()) {
            CHECK(sd->p == 7);
            CHECK(sd->m == 3);
            CHECK(sd->action_order() == 3);
            found_sd = true;
        }
    CHECK(found_sd);

    // No structurally cyclic duplicates are ever emitted.
    for (std::uint64_t n = 2; n <= 120; ++n) {
        auto all = families_of_order(n);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK_FALSE(all[i].cyclic());
        auto noncyc = families_of_order(n, FamilyOptions{}, false);
        CHECK(noncyc.size() == all.size() - 1);
    }
}

TEST_CASE("reversal search finds the intro pair at order 36") {
    auto ws = find_reversals(36, 6);
    bool found = false;
    for (const auto& w : ws) {
        if (w.g1.canonical() == "D18" && w.g2.canonical() == "A[2:2;3:1,1]") {
            found = true;
            CHECK(w.k_low == 1);
            CHECK(w.k_high == 6);
            CHECK(w.psi_low_g1 == 219);
            CHECK(w.psi_low_g2 == 275);
            CHECK(w.psi_high_g1 == 207357977);
            CHECK(w.psi_high_g2 == 48163081);
        }
        // every witness is a strict reversal
        CHECK(w.psi_low_g1 < w.psi_low_g2);
        CHECK(w.psi_high_g1 > w.psi_high_g2);
        CHECK(w.g1.order() == w.g2.order());
    }
    CHECK(found);
}

TEST_CASE("reversal search corner cases") {
    CHECK(find_reversals(4, 10).empty());
    CHECK(find_reversals(13, 8).empty());
}

TEST_CASE("extremal over order") {
    ExtremalResult r = extremal_over_order(8, 1);
    CHECK(r.argmax().spec.canonical() == "C8");
    CHECK(r.argmax().value == 43);
    CHECK(r.argmin().spec.canonical() == "A[2:1,1,1]");
    CHECK(r.argmin().value == 15);
    CHECK(r.max_strict());
    CHECK(r.min_strict());
    // D_4 = 19, Q_8 = 27 sit in between
    bool d4 = false, q8 = false;
    for (const auto& e : r.ranked) {
        if (e.spec.canonical() == "D4") { CHECK(e.value == 19); d4 = true; }
        if (e.spec.canonical() == "Dic2") { CHECK(e.value == 27); q8 = true; }
    }
    CHECK(d4);
    CHECK(q8);

    ExtremalResult r36 = extremal_over_order(36, 6);
    CHECK(r36.argmax().spec.canonical() == "C36");
    CHECK(r36.max_strict());

    ExtremalResult r2 = extremal_over_order(2, 3);
    REQUIRE(r2.ranked.size() == 1);
    CHECK(r2.argmax().spec.canonical() == "C2");
}

TEST_CASE("worst ratio scan k=1") {
    RatioScanResult res = worst_ratio_scan(100, 1, 8);
    REQUIRE(res.violations.empty());
    REQUIRE(!res.top.empty());
    const RatioRecord& best = res.top.front();
    CHECK(best.at_bound);
    CHECK(best.spec.order() == 4);
    CHECK(best.spec.canonical() == "A[2:1,1]");
    CHECK(best.psi_g * 11 == best.psi_zn * 7);
    // the bound-achievers are exactly the Z_t x Z_2 x Z_2 instances (and
    // spectrum-equal duplicates such as D_2)
    for (const auto& r : res.top)
        if (r.at_bound) CHECK(spectrum(r.spec) == spectrum(parse_spec(
            "A[2:1,1]*C" + (r.spec.order() / 4).str())));
}

TEST_CASE("worst ratio scan k=3") {
    RatioScanResult res = worst_ratio_scan(100, 3, 4);
    REQUIRE(res.violations.empty());
    const RatioRecord& best = res.top.front();
    CHECK(best.at_bound);
    CHECK(best.psi_g * 137 == best.psi_zn * 25);
}

TEST_CASE("second-best distinct ratio sits strictly below the bound") {
    RatioScanResult res = worst_ratio_scan(100, 1, 64);
    Natural cl = main_bound_coeff_lhs(1), cr = main_bound_coeff_rhs(1);
    bool seen_below = false;
    for (const auto& r : res.top) {
        if (!r.at_bound) {
            CHECK(compare_ratio(r.psi_g, r.psi_zn, cr, cl) == Cmp::LT);
            seen_below = true;
            break;
        }
    }
    CHECK(seen_below);
}
