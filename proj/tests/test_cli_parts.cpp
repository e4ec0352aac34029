#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "psik/cache.hpp"
#include "psik/parse.hpp"
#include "psik/report.hpp"
#include "psik/search_families.hpp"

using namespace psik;

TEST_CASE("round trip across the enumerated families") {
    for (std::uint64_t n = 2; n <= 100; ++n) {
        for (const auto& g : families_of_order(n)) {
            GroupSpec back = parse_spec(g.canonical());
            CHECK(back == g);
            CHECK(back.canonical() == g.canonical());
        }
    }
}

TEST_CASE("formats") {
    CHECK(format_from_name("json") == OutputFormat::Json);
    CHECK_THROWS_AS(format_from_name("yaml"), usage_error);
}

TEST_CASE("compute emitters") {
    GroupSpec g = parse_spec("D18");
    PsiValue v = psi(g, 1);
    std::ostringstream js;
    emit_compute(js, g, v, OutputFormat::Json);
    CHECK(js.str() ==
          "{\"group\":\"D18\",\"order\":\"36\",\"k\":1,\"psi_k\":\"219\",\"route\":"
          "\"dihedral-identity\"}\n");
    std::ostringstream cs;
    emit_compute(cs, g, v, OutputFormat::Csv);
    CHECK(cs.str().find("\"219\"") != std::string::npos);
    std::ostringstream tb;
    emit_compute(tb, g, v, OutputFormat::Table);
    CHECK(tb.str().find("psi_k  219") != std::string::npos);
}

TEST_CASE("report json line carries reproduction parameters") {
    BoundReport r = check_main_bound(parse_spec("D18"), 1);
    std::string line = report_json_line(r);
    CHECK(line.find("\"theorem\":\"main-bound\"") != std::string::npos);
    CHECK(line.find("\"verdict\":\"HOLDS_STRICT\"") != std::string::npos);
    CHECK(line.find("\"group\":\"D18\"") != std::string::npos);
    CHECK(line.find("\"lhs\":\"2409\"") != std::string::npos);
    CHECK(line.find("\"rhs\":\"4697\"") != std::string::npos);
}

TEST_CASE("csv emitter quotes values") {
    std::ostringstream os;
    {
        ReportEmitter e(os, OutputFormat::Csv);
        e.emit(check_main_bound(parse_spec("C2*C2"), 1));
    }
    std::string out = os.str();
    CHECK(out.find("theorem,verdict,lhs,rhs,margin,instance") != std::string::npos);
    CHECK(out.find("main-bound,HOLDS_EQUALITY,\"77\",\"77\",\"0\"") != std::string::npos);
}

TEST_CASE("cache stores, reloads and verifies") {
    std::string path = "psik_test_cache.jsonl";
    std::remove(path.c_str());
    {
        PsiCache cache(path);
        GroupSpec g = parse_spec("D18");
        cache.store(g.canonical(), 1, psi(g, 1));
        cache.store(g.canonical(), 1, psi(g, 1)); // idempotent
        cache.store(g.canonical(), 6, psi(g, 6));
        CHECK(cache.size() == 2);
    }
    {
        PsiCache cache(path);
        CHECK(cache.size() == 2);
        auto hit = cache.lookup("D18", 1);
        REQUIRE(hit.has_value());
        CHECK(hit->value == "219");
        CHECK(hit->route == "dihedral-identity");
        CHECK(cache.verify_all(nullptr) == 0);
    }
    // Corrupt line: skipped with a warning, not trusted.
    {
        std::ofstream f(path, std::ios::app);
        f << "{not json}\n";
        f << "{\"key\":\"C4|k=1\",\"psi\":\"999\",\"route\":\"fake\"}\n";
    }
    {
        std::size_t warnings = 0;
        PsiCache cache(path, [&](const std::string&) { ++warnings; });
        CHECK(warnings == 1);
        CHECK(cache.size() == 3);
        std::size_t bad = cache.verify_all(nullptr);
        CHECK(bad == 1); // the tampered C4 entry
    }
    std::remove(path.c_str());
}

TEST_CASE("cache never changes values") {
    std::string path = "psik_test_cache2.jsonl";
    std::remove(path.c_str());
    GroupSpec g = parse_spec("A[2:1,2;3:1]");
    PsiValue fresh = psi(g, 4);
    PsiCache cache(path);
    cache.store(g.canonical(), 4, fresh);
    auto hit = cache.lookup(g.canonical(), 4);
    REQUIRE(hit.has_value());
    CHECK(hit->value == fresh.value.str());
    std::remove(path.c_str());
}
