#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsdlab/invariants.hpp"

using namespace bsdlab;

namespace {

VarietyInvariants make(int g, int d, long disc, long cond, double h = 1.0, int r = 0) {
    VarietyInvariants v;
    v.g = g;
    v.d = d;
    v.disc = disc;
    v.cond = cond;
    v.faltings = h;
    v.rank = r;
    return v;
}

}  // namespace

TEST_CASE("fontaine check accepts and rejects at the documented boundary") {
    CHECK_NOTHROW(validate(make(1, 1, 1, 11)));
    CHECK_THROWS_AS(validate(make(1, 1, 1, 10)), FontaineViolation);
    CHECK_NOTHROW(validate(make(1, 2, 5, 9)));  // 9 * 25 = 225 > 100
    CHECK_THROWS_AS(validate(make(1, 2, 5, 4)), FontaineViolation);  // 100 = 100
}

TEST_CASE("validate is total: pass or FontaineViolation") {
    for (long f = 1; f < 40; ++f) {
        bool threw = false, passed = false;
        try {
            validate(make(1, 1, 1, f));
            passed = true;
        } catch (const FontaineViolation&) {
            threw = true;
        }
        CHECK(threw != passed);
        CHECK(passed == (f > 10));
    }
}

TEST_CASE("type invariants are enforced") {
    CHECK_THROWS_AS(validate(make(0, 1, 1, 11)), DegenerateInput);
    CHECK_THROWS_AS(validate(make(1, 1, 2, 11)), DegenerateInput);  // d=1 forces D_K=1
    auto v = make(1, 1, 1, 11);
    v.eps = 0.0;
    CHECK_THROWS_AS(validate(v), DegenerateInput);
    v = make(1, 1, 1, 11);
    v.rank = -1;
    CHECK_THROWS_AS(validate(v), DegenerateInput);
}

TEST_CASE("restriction of scalars is exact") {
    {
        const QInvariants q = to_q_invariants(validate(make(1, 1, 1, 37)));
        CHECK(q.g_prime == 1);
        CHECK(q.n == 37);
    }
    {
        const QInvariants q = to_q_invariants(validate(make(1, 2, 5, 11)));
        CHECK(q.g_prime == 2);
        CHECK(q.n == 275);
    }
    {
        // (g=2, d=3, D_K=4, F=7) has N = 7 * 4^4 = 1792 <= 10^6 and is
        // rejected by the Fontaine gate before the transform can run
        CHECK_THROWS_AS(to_q_invariants(validate(make(2, 3, 4, 7))), FontaineViolation);
        const QInvariants q = to_q_invariants(validate(make(2, 3, 4, 10000000)));
        CHECK(q.g_prime == 6);
        CHECK(q.n == Int(10000000) * 256);
    }
}

TEST_CASE("no overflow for discriminants up to 1e18") {
    VarietyInvariants v = make(2, 2, 1, 3);
    v.disc = Int("1000000000000000000");
    v.cond = Int("999999999999999999");
    const QInvariants q = to_q_invariants(validate(v));
    CHECK(q.n == v.cond * pow_int(v.disc, 4));
    CHECK(q.n > Int("1" + std::string(72, '0')));
}

TEST_CASE("constants config validation and AUTO resolution") {
    ConstantsConfig c;
    CHECK_NOTHROW(c.check());
    CHECK(c.resolved_matrix_c(1, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(c.resolved_matrix_c(1, 2) == doctest::Approx(1.0 / 144.0));
    CHECK(c.resolved_matrix_c(2, 1) == 1.0);
    c.matrix_c = 7.5;
    CHECK(c.resolved_matrix_c(1, 1) == 7.5);
    c.c_tors = 0.0;
    CHECK_THROWS_AS(c.check(), DegenerateInput);
}
