#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "fpl/families.hpp"
#include "fpl/gbcache.hpp"
#include "fpl/io.hpp"

using namespace fpl;

TEST_CASE("ideal json round-trip") {
    RingPtr r = Ring::bei(3, 2);
    Ideal i(r, {edge_binomial(r, 1, 2), poly_var(r, 0, 2)});
    std::string j = ideal_json(i);
    CHECK(j.find("\"p\":3") != std::string::npos);
    CHECK(j.find("\"n\":2") != std::string::npos);
    Ideal back = ideal_from_json(j);
    CHECK(back.gens == i.gens);
    CHECK_THROWS_AS(ideal_from_json("{"), input_error);
}

TEST_CASE("fedder cache replays byte-identical colon bases") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fpl-cache-test";
    fs::remove_all(dir);
    GBCache cache(dir.string());

    Graph g = cycle_graph(4);
    auto cold = fedder_run(g, 2, kDefaultBudget, "C4", OrderKind::GrevLex, &cache);
    REQUIRE(!cold.colon_gb.empty());
    auto warm = fedder_run(g, 2, kDefaultBudget, "C4", OrderKind::GrevLex, &cache);
    CHECK(warm.colon_gb == cold.colon_gb);
    CHECK(verdict_str(warm.report.verdict) == verdict_str(cold.report.verdict));

    // recompute without the cache: identical basis
    auto fresh = fedder_run(g, 2, kDefaultBudget, "C4", OrderKind::GrevLex, nullptr);
    CHECK(fresh.colon_gb == cold.colon_gb);
    fs::remove_all(dir);
}

TEST_CASE("lex order is honored in reports") {
    auto run = fedder_run(complete_graph(2), 2, kDefaultBudget, "K2", OrderKind::Lex, nullptr);
    CHECK(run.report.order == "lex");
    REQUIRE(run.report.witness_poly.has_value());
    // under lex the lead term of f12 is x1*y2
    CHECK(*run.report.witness_poly == "x1*y2 + x2*y1");
}

TEST_CASE("verdicts are order independent") {
    for (const Graph& g : {cycle_graph(5), complete_graph(3), xf2_graph(1)}) {
        auto grev = fedder_run(g, 2, kDefaultBudget, "g", OrderKind::GrevLex, nullptr);
        auto lex = fedder_run(g, 2, kDefaultBudget, "g", OrderKind::Lex, nullptr);
        CHECK(verdict_str(grev.report.verdict) == verdict_str(lex.report.verdict));
    }
}
