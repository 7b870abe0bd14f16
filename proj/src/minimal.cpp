#include "bsdlab/minimal.hpp"

namespace bsdlab {

bool kraus_conditions(const Int& c4, const Int& c6) {
    // at 3: v3(c6) != 2
    if (c6 % 9 != 0 && c6 % 3 == 0) {
        Int q = c6 / 3;
        if (q % 3 != 0) return false;  // unreachable, kept for clarity
    }
    if (valuation(c6, 3) == 2) return false;
    // at 2: c6 = -1 mod 4, or c4 = 0 mod 16 and c6 = 0,8 mod 32
    Int r4 = c6 % 4;
    if (r4 < 0) r4 += 4;
    if (r4 == 3) return true;
    if (c4 % 16 == 0) {
        Int r32 = c6 % 32;
        if (r32 < 0) r32 += 32;
        if (r32 == 0 || r32 == 8) return true;
    }
    return false;
}

CurveQ curve_from_c4c6(const Int& c4, const Int& c6) {
    Int b2 = (-c6) % 12;
    if (b2 < 0) b2 += 12;
    if (b2 > 6) b2 -= 12;
    if ((b2 * b2 - c4) % 24 != 0)
        throw Error("curve_from_c4c6: invalid pair (b4 not integral)");
    const Int b4 = (b2 * b2 - c4) / 24;
    if ((-b2 * b2 * b2 + 36 * b2 * b4 - c6) % 216 != 0)
        throw Error("curve_from_c4c6: invalid pair (b6 not integral)");
    const Int b6 = (-b2 * b2 * b2 + 36 * b2 * b4 - c6) / 216;
    Int a1 = b2 % 2;
    if (a1 < 0) a1 += 2;
    const Int a2 = (b2 - a1 * a1) / 4;
    Int a3 = b6 % 2;
    if (a3 < 0) a3 += 2;
    const Int a6 = (b6 - a3 * a3) / 4;
    if ((b4 - a1 * a3) % 2 != 0)
        throw Error("curve_from_c4c6: invalid pair (a4 not integral)");
    const Int a4 = (b4 - a1 * a3) / 2;
    CurveQ out(a1, a2, a3, a4, a6);
    if (out.c4() != c4 || out.c6() != c6)
        throw Error("curve_from_c4c6: pair fails the Kraus integrality conditions");
    return out;
}

CurveQ minimal_model(const CurveQ& e, Int& u_out) {
    Int c4 = e.c4(), c6 = e.c6(), d = e.disc();
    Int u = 1;
    // a removable prime satisfies p^12 | disc, so p <= |disc|^{1/12}
    std::map<Int, int> cand;
    {
        Int ad = abs(d);
        for (std::uint64_t p = 2; ; p == 2 ? p = 3 : p += 2) {
            if (pow_int(Int(p), 12) > ad) break;
            if (ad % pow_int(Int(p), 12) == 0) cand[Int(p)] = 1;
        }
    }
    for (auto& [p, ignored] : cand) {
        (void)ignored;
        const Int p4 = pow_int(p, 4), p6 = pow_int(p, 6), p12 = pow_int(p, 12);
        while (c4 % p4 == 0 && c6 % p6 == 0 && d % p12 == 0) {
            const Int nc4 = c4 / p4, nc6 = c6 / p6;
            if (p >= 5 || kraus_conditions(nc4, nc6)) {
                c4 = nc4;
                c6 = nc6;
                d /= p12;
                u *= p;
            } else {
                break;
            }
        }
    }
    u_out = u;
    CurveQ m = curve_from_c4c6(c4, c6);
    m.set_label(e.label());
    return m;
}

CurveQ minimal_model(const CurveQ& e) {
    Int u;
    return minimal_model(e, u);
}

RationalPoint to_minimal(const CurveQ& e, const RationalPoint& p) {
    if (p.infinity) return p;
    Int u;
    const CurveQ m = minimal_model(e, u);
    // recover (r, s, t) of the transform x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
    const Int u2 = u * u, u3 = u2 * u;
    if ((u2 * m.b2() - e.b2()) % 12 != 0) throw Error("to_minimal: r not integral");
    const Int r = (u2 * m.b2() - e.b2()) / 12;
    if ((u * m.a1() - e.a1()) % 2 != 0) throw Error("to_minimal: s not integral");
    const Int s = (u * m.a1() - e.a1()) / 2;
    if ((u3 * m.a3() - e.a3() - r * e.a1()) % 2 != 0)
        throw Error("to_minimal: t not integral");
    const Int t = (u3 * m.a3() - e.a3() - r * e.a1()) / 2;
    const Rat xp = (p.x - r) / Rat(u2);
    const Rat yp = (p.y - Rat(s) * (p.x - r) - t) / Rat(u3);
    const RationalPoint q = RationalPoint::affine(xp, yp);
    if (!m.contains(q)) throw Error("to_minimal: transformed point off curve");
    return q;
}

}  // namespace bsdlab
