#include <doctest.h>

#include <fstream>
#include <sstream>

#include "psik/group.hpp"
#include "psik/parse.hpp"
#include "psik/spectrum.hpp"

using namespace psik;

namespace {
std::string data_path(const std::string& name) { return std::string(TEST_DATA_DIR "/") + name; }
} // namespace

TEST_CASE("orders") {
    CHECK(parse_spec("C36").order() == 36);
    CHECK(parse_spec("D18").order() == 36);
    CHECK(parse_spec("Dic3").order() == 12);
    CHECK(parse_spec("A[2:2;3:1,1]").order() == 36);
    CHECK(parse_spec("SD(7^1,3,2)").order() == 21);
    CHECK(parse_spec("C4*C3*C3").order() == 36);
}

TEST_CASE("structural cyclicity") {
    CHECK(parse_spec("C12").cyclic());
    CHECK(parse_spec("C1").cyclic());
    CHECK_FALSE(parse_spec("A[2:1,1]").cyclic());
    CHECK(parse_spec("A[2:2]").cyclic());          // single part per prime
    CHECK(parse_spec("A[2:2;3:1]").cyclic());      // Z_4 x Z_3 = Z_12
    CHECK(parse_spec("D1").cyclic());              // Z_2
    CHECK_FALSE(parse_spec("D2").cyclic());        // Klein four
    CHECK_FALSE(parse_spec("Dic2").cyclic());      // Q_8
    CHECK(parse_spec("SD(7^1,3,1)").cyclic());     // trivial action: Z_21
    CHECK_FALSE(parse_spec("SD(7^1,3,2)").cyclic());
    CHECK(parse_spec("C2*C3").cyclic());
    CHECK_FALSE(parse_spec("C2*C2").cyclic());
    CHECK_FALSE(parse_spec("C2*C6").cyclic());
    CHECK(parse_spec("D1*C3").cyclic());           // Z_2 x Z_3
}

TEST_CASE("parse rejects bad syntax with caret position") {
    try {
        parse_spec("C4*C");
        FAIL("expected usage_error");
    } catch (const usage_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("position 4") != std::string::npos);
        CHECK(msg.find('^') != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec(""), usage_error);
    CHECK_THROWS_AS(parse_spec("Q8"), usage_error);
    CHECK_THROWS_AS(parse_spec("C4**C3"), usage_error);
    CHECK_THROWS_AS(parse_spec("A[2:]"), usage_error);
    CHECK_THROWS_AS(parse_spec("SD(7^1,3)"), usage_error);
}

TEST_CASE("parse rejects broken invariants") {
    CHECK_THROWS_AS(parse_spec("A[4:1]"), validation_error);      // 4 not prime
    CHECK_THROWS_AS(parse_spec("A[2:2,1]"), validation_error);    // not ascending
    CHECK_THROWS_AS(parse_spec("SD(6^1,5,1)"), validation_error); // 6 not prime
    CHECK_THROWS_AS(parse_spec("SD(7^1,7,1)"), validation_error); // gcd(p, m) != 1
    CHECK_THROWS_AS(parse_spec("SD(7^1,3,3)"), validation_error); // 3^3 = 27 != 1 mod 7
    CHECK_THROWS_AS(parse_spec("SD(7^1,3,0)"), validation_error);
    CHECK_THROWS_AS(parse_spec("Dic1"), validation_error);
    CHECK_THROWS_AS(parse_spec("C0"), validation_error);
}

TEST_CASE("canonical render and round trip") {
    CHECK(parse_spec("C4*C3*C3").canonical() == "C3*C3*C4");
    CHECK(parse_spec("A[3:1,1;2:2]").canonical() == "A[2:2;3:1,1]");
    CHECK(parse_spec("SD(7^1,3,2)").canonical() == "SD(7^1,3,2)");
    for (const char* text : {"C36", "D18", "Dic5", "A[2:1,2;5:1]", "SD(5^2,4,7)", "C3*C3*C4"}) {
        GroupSpec g = parse_spec(text);
        GroupSpec again = parse_spec(g.canonical());
        CHECK(again.canonical() == g.canonical());
        CHECK(again == g);
    }
}

TEST_CASE("build_cayley cyclic is addition mod n") {
    CayleyTable t = build_cayley(GroupSpec::cyclic(6));
    REQUIRE(t.n == 6);
    for (std::uint32_t i = 0; i < 6; ++i)
        for (std::uint32_t j = 0; j < 6; ++j) CHECK(t.at(i, j) == (i + j) % 6);
}

TEST_CASE("build_cayley produces valid group tables") {
    for (const char* text : {"C12", "D9", "Dic3", "A[2:1,2]", "SD(7^1,3,2)", "C2*D4"}) {
        CayleyTable t = build_cayley(parse_spec(text));
        t.validate_latin_identity();
        t.validate_associativity();
    }
}

TEST_CASE("build_cayley honors the cap") {
    CHECK_THROWS_AS(build_cayley(GroupSpec::cyclic(5001)), resource_error);
    CHECK_THROWS_AS(build_cayley(GroupSpec::cyclic(100), 50), resource_error);
}

TEST_CASE("cayley json load") {
    GroupSpec g = parse_spec("file:" + data_path("z4.json"));
    CHECK(g.order() == 4);
    CHECK(g.cyclic());
}

TEST_CASE("latin violation names the cell") {
    std::ifstream f(data_path("bad_latin.json"));
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        load_cayley_json(ss.str(), CayleyCheckPolicy::Auto, "bad_latin");
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("row 1 repeats element 1") != std::string::npos);
    }
}

TEST_CASE("non-associative loop is rejected by Light's test") {
    std::ifstream f(data_path("loop5.json"));
    std::stringstream ss;
    ss << f.rdbuf();
    // Latin square with identity, but not a group.
    try {
        load_cayley_json(ss.str(), CayleyCheckPolicy::Always, "loop5");
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("associativity fails") != std::string::npos);
    }
    // Policy Never skips the associativity proof.
    CHECK_NOTHROW(load_cayley_json(ss.str(), CayleyCheckPolicy::Never, "loop5"));
}

TEST_CASE("cayley json round trip") {
    CayleyTable t = build_cayley(parse_spec("D6"));
    CayleyTable back = load_cayley_json(cayley_to_json(t), CayleyCheckPolicy::Always);
    CHECK(back == t);
}

TEST_CASE("malformed cayley json") {
    CHECK_THROWS_AS(load_cayley_json("{", CayleyCheckPolicy::Auto), validation_error);
    CHECK_THROWS_AS(load_cayley_json("{\"n\": 2}", CayleyCheckPolicy::Auto), validation_error);
    CHECK_THROWS_AS(load_cayley_json("{\"n\": 2, \"identity\": 0, \"table\": [[0,1]]}",
                                     CayleyCheckPolicy::Auto),
                    validation_error);
    CHECK_THROWS_AS(load_cayley_json("{\"n\": 1, \"identity\": 3, \"table\": [[0]]}",
                                     CayleyCheckPolicy::Auto),
                    validation_error);
}

TEST_CASE("spec ordering is total and deterministic") {
    GroupSpec a = parse_spec("C4");
    GroupSpec b = parse_spec("A[2:1,1]");
    GroupSpec c = parse_spec("D2");
    CHECK(spec_less(a, b));
    CHECK(spec_less(b, c));
    CHECK_FALSE(spec_less(a, a));
}
