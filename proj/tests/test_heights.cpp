#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsdlab/heights.hpp"
#include "bsdlab/mwsearch.hpp"
#include "bsdlab/torsion.hpp"
#include "testutil.hpp"

using namespace bsdlab;

namespace {
constexpr double H37_GEN = 0.0511114082399688402358861;    // hhat((0,0)) on 37a1
constexpr double H432_GEN = 0.4503206856398749935318636;   // hhat((2,2)) on y^2=x^3-4
constexpr double REG_389 = 0.1524601779431437516243248;    // from basis (0,0),(1,0)
constexpr double H389_P1 = 0.3270007736516049518432592;
constexpr double H389_P2 = 0.4767116593437395373794861;
constexpr double H65_GEN = 0.3755140986612663218044729;    // hhat((-1,0)) on 65a1
}  // namespace

TEST_CASE("37a1 generator height to 10+ digits, duplication oracle to 1e-6") {
    const CurveQ e = testutil::curve("37a1");
    const RationalPoint p = RationalPoint::affine(0, 0);
    const double h = canonical_height(e, p);
    CHECK(h == doctest::Approx(H37_GEN).epsilon(1e-11));
    CHECK(std::fabs(h - testutil::duplication_height(e, p, 9)) < 1e-6);
}

TEST_CASE("torsion points have height exactly zero") {
    const CurveQ e = testutil::curve("11a1");
    CHECK(canonical_height(e, RationalPoint::affine(5, 5)) == 0.0);
    for (const auto& ent : testutil::corpus()) {
        const TorsionInfo t = torsion_subgroup(ent.curve());
        for (const auto& p : t.points) {
            if (p.infinity) continue;
            CHECK(canonical_height(ent.curve(), p) < 1e-12);
        }
    }
}

TEST_CASE("quadraticity |hhat(2P) - 4 hhat(P)| < 1e-8") {
    for (const auto& ent : testutil::corpus()) {
        if (ent.known_generators.empty()) continue;
        const CurveQ e = ent.curve();
        for (const auto& p : ent.known_generators) {
            const double h = canonical_height(e, p);
            const double h2 = canonical_height(e, e.add(p, p));
            CHECK_MESSAGE(std::fabs(h2 - 4 * h) < 1e-8, ent.label);
            const double h3 = canonical_height(e, e.mul(3, p));
            CHECK_MESSAGE(std::fabs(h3 - 9 * h) < 1e-8, ent.label);
        }
    }
}

TEST_CASE("parallelogram law on 389a1") {
    const CurveQ e = testutil::curve("389a1");
    const RationalPoint p = RationalPoint::affine(0, 0), q = RationalPoint::affine(1, 0);
    const double hp = canonical_height(e, p), hq = canonical_height(e, q);
    const RationalPoint s = e.add(p, q), d = e.add(p, e.negate(q));
    const double hs = canonical_height(e, s), hd = canonical_height(e, d);
    CHECK(std::fabs(hs + hd - 2 * hp - 2 * hq) < 1e-8);
    CHECK(hp == doctest::Approx(H389_P1).epsilon(1e-10));
    CHECK(hq == doctest::Approx(H389_P2).epsilon(1e-10));
}

TEST_CASE("additive-singular local contribution: (2,2) on y^2 = x^3 - 4") {
    const CurveQ e = testutil::curve("c432n1");
    const RationalPoint p = RationalPoint::affine(2, 2);
    CHECK(canonical_height(e, p) == doctest::Approx(H432_GEN).epsilon(1e-11));
    // the point reduces to the cusp at 2; the correction is -psi3-valuation/4
    CHECK(local_height_at(e, p, 2) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(local_height_at(e, p, 3) == 0.0);
    // the doubling tail on this curve is ~2e-6 at n = 9 (error ~ C/4^n)
    CHECK(std::fabs(canonical_height(e, p) - testutil::duplication_height(e, p, 9)) <
          4e-6);
}

TEST_CASE("multiplicative-singular component corrections cancel on torsion") {
    // (5,5) on 11a1 reduces to the I5 node: correction -(1*4/5) ln 11
    const CurveQ e = testutil::curve("11a1");
    const RationalPoint t = RationalPoint::affine(5, 5);
    CHECK(local_height_at(e, t, 11) ==
          doctest::Approx(-(4.0 / 5.0) * std::log(11.0)).epsilon(1e-12));
}

TEST_CASE("points with denominators pick up the right local parts") {
    const CurveQ e = testutil::curve("37a1");
    // 4P = (2, -3)? compute 4(0,0) exactly and verify hhat via oracle
    const RationalPoint p = RationalPoint::affine(0, 0);
    const RationalPoint p4 = e.mul(4, p), p5 = e.mul(5, p);
    CHECK(canonical_height(e, p4) == doctest::Approx(16 * H37_GEN).epsilon(1e-9));
    CHECK(canonical_height(e, p5) == doctest::Approx(25 * H37_GEN).epsilon(1e-9));
    CHECK(rat_den(p5.x) > 1);  // exercises the denominator branch
}

TEST_CASE("regulator: empty list is 1, 389a1 basis gives the pinned value") {
    const CurveQ e = testutil::curve("389a1");
    CHECK(regulator(e, {}) == 1.0);
    const std::vector<RationalPoint> basis = {RationalPoint::affine(0, 0),
                                              RationalPoint::affine(1, 0)};
    CHECK(regulator(e, basis) == doctest::Approx(REG_389).epsilon(1e-9));
    // invariance under a unimodular change of basis, to 1e-9 relative
    const std::vector<RationalPoint> basis2 = {
        e.add(basis[0], basis[1]),
        e.add(e.add(basis[0], basis[1]), basis[1])};
    CHECK(std::fabs(regulator(e, basis2) / regulator(e, basis) - 1.0) < 1e-9);
}

TEST_CASE("65a1: generator height with 2-torsion present") {
    const CurveQ e = testutil::curve("65a1");
    CHECK(canonical_height(e, RationalPoint::affine(-1, 0)) ==
          doctest::Approx(H65_GEN).epsilon(1e-10));
}

TEST_CASE("height pairing is bilinear on 389a1 within tolerance") {
    const CurveQ e = testutil::curve("389a1");
    const RationalPoint p = RationalPoint::affine(0, 0), q = RationalPoint::affine(1, 0);
    const double pq = height_pairing(e, p, q);
    const double p_qq = height_pairing(e, p, e.add(q, q));
    CHECK(p_qq == doctest::Approx(2 * pq).epsilon(1e-7));
}

TEST_CASE("rejects points off the curve") {
    const CurveQ e = testutil::curve("37a1");
    CHECK_THROWS_AS(canonical_height(e, RationalPoint::affine(3, 3)), NonRationalPoint);
}

TEST_CASE("height difference bound dominates exhaustive small points") {
    for (const char* lbl : {"37a1", "11a1", "389a1", "c432n1", "65a1"}) {
        const CurveQ e = testutil::curve(lbl);
        const double delta = height_difference_bound(e);
        CHECK(delta >= 0);
        for (const auto& p : search_points(e, 3.0)) {
            const double gap = naive_height(p.x) - canonical_height(e, p);
            CHECK_MESSAGE(gap <= delta, lbl << " at " << to_string(p));
        }
    }
}

TEST_CASE("extended-precision heights agree with the double path") {
    const CurveQ e = testutil::curve("37a1");
    const Ext hx = canonical_height_ext(e, RationalPoint::affine(0, 0));
    CHECK(double(hx) == doctest::Approx(H37_GEN).epsilon(1e-13));
    const CurveQ e4 = testutil::curve("c432n1");
    CHECK(double(canonical_height_ext(e4, RationalPoint::affine(2, 2))) ==
          doctest::Approx(H432_GEN).epsilon(1e-13));
}

TEST_CASE("parallelogram law at random small combinations on 389a1") {
    const CurveQ e = testutil::curve("389a1");
    const RationalPoint g1 = RationalPoint::affine(0, 0), g2 = RationalPoint::affine(1, 0);
    testutil::Rng rng;
    for (int i = 0; i < 6; ++i) {
        const long a = rng.pick(-2, 2), b = rng.pick(-2, 2), c = rng.pick(-2, 2),
                   d = rng.pick(-2, 2);
        const RationalPoint p = e.add(e.mul(a, g1), e.mul(b, g2));
        const RationalPoint q = e.add(e.mul(c, g1), e.mul(d, g2));
        if (p.infinity || q.infinity) continue;
        const RationalPoint s = e.add(p, q), m = e.add(p, e.negate(q));
        const double hs = s.infinity ? 0 : canonical_height(e, s);
        const double hm = m.infinity ? 0 : canonical_height(e, m);
        CHECK(std::fabs(hs + hm - 2 * canonical_height(e, p) -
                        2 * canonical_height(e, q)) < 1e-8);
    }
}
