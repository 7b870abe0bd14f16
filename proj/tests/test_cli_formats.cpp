#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsdlab/bsdcheck.hpp"
#include "bsdlab/jsonfmt.hpp"
#include "testutil.hpp"

using namespace bsdlab;

TEST_CASE("corpus file parses with all metadata") {
    const auto entries = testutil::corpus();
    CHECK(entries.size() >= 20);
    int with_gens = 0, rank_total = 0;
    std::set<int> torsions;
    for (const auto& ent : entries) {
        REQUIRE(ent.known_rank.has_value());
        REQUIRE(ent.known_torsion.has_value());
        rank_total += *ent.known_rank;
        torsions.insert(*ent.known_torsion);
        if (!ent.known_generators.empty()) ++with_gens;
        CHECK(int(ent.known_generators.size()) == *ent.known_rank);
    }
    CHECK(with_gens >= 7);
    CHECK(rank_total >= 9);
    // torsion coverage {1..10, 12}
    for (int t : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) CHECK(torsions.count(t) == 1);
}

TEST_CASE("corpus rejects malformed lines") {
    CHECK_THROWS_AS(parse_corpus("x1:[0,0,0,0]"), ParseError);
    CHECK_THROWS_AS(parse_corpus("[0,0,1,-1,0]"), ParseError);  // no label
    CHECK_THROWS_AS(parse_corpus("x1:[0,0,1,-1,0] | bogus"), ParseError);
    CHECK_THROWS_AS(parse_corpus("x1:[0,0,1,-1,0] | gens=(1,1)"), ParseError);  // off curve
    CHECK(parse_corpus("# only a comment\n\n").empty());
}

TEST_CASE("float formatting is stable and 12 significant digits") {
    CHECK(fmt_real(0.25384186085591068) == "2.53841860856e-01");
    CHECK(fmt_real(-1.0) == "-1.00000000000e+00");
    CHECK(fmt_real(19823.546687378357) == "1.98235466874e+04");
}

TEST_CASE("reports serialize deterministically") {
    const BsdTerms t = assemble(testutil::curve("11a1"), {});
    const std::string once = dump(json_of(t));
    const BsdTerms t2 = assemble(testutil::curve("11a1"), {});
    CHECK(once == dump(json_of(t2)));
    // stable key order
    CHECK(once.find("\"label\"") < once.find("\"l_star\""));
    CHECK(once.find("\"l_star\"") < once.find("\"sha_predicted\""));
}

TEST_CASE("bound reports embed inputs, constants and assumptions") {
    VarietyInvariants v;
    v.cond = 37;
    v.rank = 1;
    const auto rep = generator_height_bound(validate(v), {});
    const Json j = json_of(rep);
    CHECK(j["inputs"]["cond"] == "37");
    CHECK(j["constants"]["matrix_c"] == "auto");
    const auto& as = j["assumptions"];
    CHECK(as.size() == 3);
    CHECK(as[0] == "FE");
    CHECK(as[1] == "BSD");
    CHECK(as[2] == "MASSER");
    CHECK(j.contains("ln_bound"));
    CHECK(j.contains("log10_bound"));
}

TEST_CASE("invariants and constants survive a JSON round trip") {
    VarietyInvariants v;
    v.g = 2;
    v.d = 3;
    v.disc = Int("123456789012345");
    v.cond = Int("987654321098765");
    v.faltings = -1.25;
    v.rank = 4;
    v.eps = 0.125;
    const VarietyInvariants w = invariants_from_json(json_of(v));
    CHECK(w.g == v.g);
    CHECK(w.d == v.d);
    CHECK(w.disc == v.disc);
    CHECK(w.cond == v.cond);
    CHECK(w.faltings == doctest::Approx(v.faltings));
    CHECK(w.rank == v.rank);
    ConstantsConfig c;
    c.masser_c = 0.25;
    c.c_tors = 2.0;
    const ConstantsConfig e = constants_from_json(json_of(c));
    CHECK(e.masser_c == doctest::Approx(0.25));
    CHECK_FALSE(e.matrix_c.has_value());  // auto survives
    c.matrix_c = 1.5;
    CHECK(constants_from_json(json_of(c)).matrix_c.value() == doctest::Approx(1.5));
}

TEST_CASE("invariants serialize with the documented keys") {
    VarietyInvariants v;
    v.g = 1;
    v.d = 1;
    v.disc = 1;
    v.cond = 11;
    v.faltings = -0.308;
    v.rank = 0;
    const Json j = json_of(v);
    for (const char* key : {"g", "d", "disc", "cond", "faltings", "rank", "eps"})
        CHECK(j.contains(key));
}
