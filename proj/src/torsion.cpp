#include "bsdlab/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bsdlab/counting.hpp"
#include "bsdlab/minimal.hpp"

namespace bsdlab {

namespace {

// integer roots of the monic cubic X^3 + A X + C via real roots + exact check
std::vector<Int> integer_cubic_roots(const Int& A, const Int& C) {
    std::vector<Int> out;
    const double a = static_cast<double>(Ext(A)), c = static_cast<double>(Ext(C));
    // real roots of x^3 + a x + c by Cardano/trig in double, then exact probe
    std::vector<double> guesses;
    const double q = a / 3.0, r = -c / 2.0;
    const double disc = q * q * q + r * r;
    if (disc >= 0) {
        const double s = std::cbrt(r + std::sqrt(disc)), t = std::cbrt(r - std::sqrt(disc));
        guesses.push_back(s + t);
        guesses.push_back(-(s + t) / 2);  // the double root when disc = 0
    } else {
        const double rho = std::sqrt(-q * q * q), theta = std::acos(r / rho);
        const double m = 2.0 * std::sqrt(-q);
        for (int k = 0; k < 3; ++k)
            guesses.push_back(m * std::cos((theta + 2.0 * M_PI * k) / 3.0));
    }
    std::set<Int> seen;
    for (double g : guesses) {
        const Int base(static_cast<long long>(std::llround(g)));
        for (Int x = base - 2; x <= base + 2; ++x) {
            if (x * x * x + A * x + C == 0 && !seen.count(x)) {
                seen.insert(x);
                out.push_back(x);
            }
        }
    }
    return out;
}

}  // namespace

long point_order(const CurveQ& e, const RationalPoint& p, long cap) {
    RationalPoint q = RationalPoint::zero();
    for (long n = 1; n <= cap; ++n) {
        q = e.add(q, p);
        if (q.infinity) return n;
    }
    return 0;
}

TorsionInfo torsion_subgroup(const CurveQ& e0) {
    const CurveQ e = minimal_model(e0);
    TorsionInfo info;

    // injection bound: |tors| divides #E(F_p) for odd good p (the reduction
    // map is injective on torsion away from 2); two primes as in the lemma
    long bound = 0;
    int used = 0;
    for (std::uint32_t p = 3; used < 2 && p < 1000; p += 2) {
        bool prime = p % 2 == 1;
        for (std::uint32_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) { prime = false; break; }
        if (!prime || mod_u64(e.disc(), p) == 0) continue;
        bound = std::gcd(bound, long(count_points(e, p)));
        ++used;
    }
    info.injection_bound = bound;
    if (bound == 1) {
        info.points.push_back(RationalPoint::zero());
        return info;
    }

    // Lutz-Nagell on Y^2 = X^3 - 27 c4 X - 54 c6 (X = 36x + 3b2,
    // Y = 108(2y + a1x + a3)); Y = 0 or Y^2 | 2^8 3^12 |disc|
    const Int A = -27 * e.c4(), C0 = -54 * e.c6();
    const Int M = pow_int(2, 8) * pow_int(3, 12) * abs(e.disc());
    std::vector<Int> ys{0, 1};
    for (auto& [p, k] : factorize(M)) {
        const size_t base = ys.size();
        Int pe = 1;
        for (int i = 1; 2 * i <= k; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) if (ys[j] != 0) ys.push_back(ys[j] * pe);
        }
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<RationalPoint> tors{RationalPoint::zero()};
    std::set<std::pair<Rat, Rat>> seen;
    for (const Int& Y : ys) {
        for (const Int& X : integer_cubic_roots(A, C0 - Y * Y)) {
            const Rat x = Rat(X - 3 * e.b2(), 36);
            const Rat y = (Rat(Y, 108) - Rat(e.a1()) * x - Rat(e.a3())) / 2;
            const RationalPoint P = RationalPoint::affine(x, y);
            if (!e.contains(P)) continue;
            const long ord = point_order(e, P, bound);
            if (ord == 0 || bound % ord != 0) continue;  // not torsion
            for (const RationalPoint& Q : {P, e.negate(P)}) {
                if (!seen.count({Q.x, Q.y})) {
                    seen.insert({Q.x, Q.y});
                    tors.push_back(Q);
                }
            }
        }
    }

    info.order = int(tors.size());
    long maxord = 1;
    RationalPoint gen = RationalPoint::zero();
    int two_torsion = 0;
    for (const auto& P : tors) {
        if (P.infinity) continue;
        const long o = point_order(e, P, info.order);
        if (o == 2) ++two_torsion;
        if (o > maxord) { maxord = o; gen = P; }
    }
    if (maxord == info.order) {
        info.n1 = 1;
        info.n2 = info.order;
        if (!gen.infinity) info.generators.push_back(gen);
    } else {
        // Mazur leaves only Z/2 x Z/2m here
        if (2 * maxord != info.order || two_torsion != 3)
            throw Error("torsion: inconsistent group structure");
        info.n1 = 2;
        info.n2 = int(maxord);
        info.generators.push_back(gen);
        // a 2-torsion point outside <gen>
        const RationalPoint half = e.mul(maxord / 2, gen);
        for (const auto& P : tors) {
            if (!P.infinity && point_order(e, P, 2) == 2 && !(P == half)) {
                info.generators.push_back(P);
                break;
            }
        }
    }
    info.points = std::move(tors);

    // the injection mechanism again, as a guard: order divides the bound
    if (bound % info.order != 0)
        throw Error("torsion: order does not divide the injection bound");
    return info;
}

}  // namespace bsdlab
