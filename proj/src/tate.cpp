#include "bsdlab/tate.hpp"

#include <array>

#include "bsdlab/minimal.hpp"

namespace bsdlab {

namespace {

Int mod(const Int& x, const Int& p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
}

// working model with translation support
struct Model {
    std::array<Int, 5> a;  // a1,a2,a3,a4,a6

    Int b2() const { return a[0] * a[0] + 4 * a[1]; }
    Int b6() const { return a[2] * a[2] + 4 * a[4]; }
    Int b8() const {
        return a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] +
               a[1] * a[2] * a[2] - a[3] * a[3];
    }
    Int disc() const {
        const Int B2 = b2(), B4 = 2 * a[3] + a[0] * a[2], B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
    }
    // x -> x + r, y -> y + s x + t
    void translate(const Int& r, const Int& s, const Int& t) {
        const Int a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
        a[0] = a1 + 2 * s;
        a[1] = a2 - s * a1 + 3 * r - s * s;
        a[2] = a3 + r * a1 + 2 * t;
        a[3] = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        a[4] = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    }
};

bool is_square_mod(const Int& x, const Int& p) {
    // p odd prime
    const Int r = mod(x, p);
    if (r == 0) return true;
    const std::uint64_t pp = static_cast<std::uint64_t>(p);
    return pow_mod(static_cast<std::uint64_t>(r), (pp - 1) / 2, pp) == 1;
}

// roots with multiplicity of a monic cubic T^3 + bT^2 + cT + d over F_p by scan
// (additive primes satisfy p^2 | N, so p is small)
struct CubicRoots {
    std::vector<std::pair<Int, int>> roots;  // (root, multiplicity)
    int distinct_in_fp() const { return int(roots.size()); }
};

CubicRoots cubic_roots_mod(const Int& b, const Int& c, const Int& d, const Int& p) {
    if (p > 2'000'000)
        throw FactorizationIncomplete("tate: additive prime too large for scan: " + p.str());
    CubicRoots out;
    const long pp = static_cast<long>(p);
    for (long x = 0; x < pp; ++x) {
        Int xi(x);
        if (mod(((xi + b) * xi + c) * xi + d, p) != 0) continue;
        // multiplicity by synthetic division
        Int q2 = 1, q1 = mod(b + xi, p), q0 = mod(c + xi * (b + xi), p);
        int m = 1;
        if (mod(q0 + xi * (q1 + xi * q2), p) == 0) {
            m = 2;
            if (mod(q1 + 2 * xi, p) == 0) m = 3;
        }
        out.roots.push_back({xi, m});
    }
    return out;
}

// number of roots in F_p of A T^2 + B T + C (A invertible mod p); if the root
// is double, writes it to dbl
int quad_root_count(const Int& A, const Int& B, const Int& C, const Int& p, Int* dbl) {
    if (p == 2) {
        int cnt = 0;
        Int last = 0;
        for (int x = 0; x < 2; ++x) {
            if (mod(A * x * x + B * x + C, p) == 0) { ++cnt; last = x; }
        }
        // over F_2 a double root means X^2+C-shape: A T^2 + B T + C with B even
        if (cnt == 1 && mod(B, p) == 0) { if (dbl) *dbl = last; return -1; }
        return cnt;   // 0, 1(=two roots? no: distinct roots), 2
    }
    const Int disc = B * B - 4 * A * C;
    if (mod(disc, p) == 0) {
        if (dbl) *dbl = mod(-B * Int(inv_mod(mod_u64(2 * A, static_cast<std::uint64_t>(p)),
                                             static_cast<std::uint64_t>(p))), p);
        return -1;  // double root
    }
    return is_square_mod(disc, p) ? 2 : 0;
}

// singular point of the reduced curve, as lifted integers
std::pair<Int, Int> singular_point(const Model& m, const Int& p) {
    if (p <= 3) {
        const long pp = static_cast<long>(p);
        for (long x = 0; x < pp; ++x)
            for (long y = 0; y < pp; ++y) {
                const Int xi(x), yi(y);
                const Int f = yi * yi + m.a[0] * xi * yi + m.a[2] * yi - xi * xi * xi -
                              m.a[1] * xi * xi - m.a[3] * xi - m.a[4];
                const Int fx = m.a[0] * yi - 3 * xi * xi - 2 * m.a[1] * xi - m.a[3];
                const Int fy = 2 * yi + m.a[0] * xi + m.a[2];
                if (mod(f, p) == 0 && mod(fx, p) == 0 && mod(fy, p) == 0)
                    return {xi, yi};
            }
        throw Error("tate: singular point not found at p = " + p.str());
    }
    const std::uint64_t pp = static_cast<std::uint64_t>(p);
    const Int B2 = m.b2(), B4 = 2 * m.a[3] + m.a[0] * m.a[2], B6 = m.b6();
    const Int C4 = B2 * B2 - 24 * B4;
    Int x0;
    if (mod(C4, p) != 0) {
        // node: double root of 4x^3 + b2 x^2 + 2 b4 x + b6 is (18 b6 - b2 b4)/c4
        x0 = mod((18 * B6 - B2 * B4) * Int(inv_mod(mod_u64(C4, pp), pp)), p);
    } else {
        // cusp: triple root -b2/12
        x0 = mod(-B2 * Int(inv_mod(12 % pp, pp)), p);
    }
    const Int y0 = mod(-(m.a[0] * x0 + m.a[2]) * Int(inv_mod(2, pp)), p);
    return {x0, y0};
}

int vP(const Int& x, const Int& p) { return valuation(x, p); }

}  // namespace

std::string LocalData::kodaira_symbol() const {
    switch (kodaira) {
        case KodairaType::I0: return "I0";
        case KodairaType::In: return "I" + std::to_string(n);
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::I0star: return "I0*";
        case KodairaType::Instar: return "I" + std::to_string(n) + "*";
        case KodairaType::IVstar: return "IV*";
        case KodairaType::IIIstar: return "III*";
        case KodairaType::IIstar: return "II*";
    }
    return "?";
}

LocalData tate_local_data(const CurveQ& e_min, const Int& p) {
    LocalData out;
    out.p = p;
    Model m{{e_min.a1(), e_min.a2(), e_min.a3(), e_min.a4(), e_min.a6()}};

    for (int pass = 0; pass < 32; ++pass) {
        const Int D = m.disc();
        const int n = vP(D, p);
        if (n == 0) {
            out.kodaira = KodairaType::I0;
            out.f_p = 0;
            out.tamagawa = 1;
            out.reduction = ReductionType::good;
            return out;
        }

        auto [x0, y0] = singular_point(m, p);
        m.translate(x0, 0, y0);
        if (mod(m.a[2], p) != 0 || mod(m.a[3], p) != 0 || mod(m.a[4], p) != 0)
            throw Error("tate: translation to singular point failed");

        if (mod(m.b2(), p) != 0) {
            // multiplicative: type I_n; tangents split iff T^2 + a1 T - a2 splits
            bool split;
            if (p == 2) {
                split = false;
                for (int t = 0; t < 2; ++t)
                    if (mod(Int(t) * t + m.a[0] * t - m.a[1], p) == 0) split = true;
            } else {
                split = is_square_mod(m.a[0] * m.a[0] + 4 * m.a[1], p);
            }
            out.kodaira = KodairaType::In;
            out.n = n;
            out.f_p = 1;
            out.tamagawa = split ? n : (n % 2 == 0 ? 2 : 1);
            out.reduction = split ? ReductionType::split_mult : ReductionType::nonsplit_mult;
            return out;
        }

        out.reduction = ReductionType::additive;

        if (vP(m.a[4], p) < 2) {
            out.kodaira = KodairaType::II;
            out.f_p = n;
            out.tamagawa = 1;
            return out;
        }
        if (vP(m.b8(), p) < 3) {
            out.kodaira = KodairaType::III;
            out.f_p = n - 1;
            out.tamagawa = 2;
            return out;
        }
        if (vP(m.b6(), p) < 3) {
            // type IV: Y^2 + (a3/p) Y - a6/p^2
            const int rc = quad_root_count(1, m.a[2] / p, -(m.a[4] / (p * p)), p, nullptr);
            out.kodaira = KodairaType::IV;
            out.f_p = n - 2;
            out.tamagawa = rc > 0 ? 3 : 1;
            return out;
        }

        // arrange p | a1,a2, p^2 | a3,a4, p^3 | a6
        if (p == 2) {
            bool done = false;
            for (Int s = 0; s < 2 && !done; ++s)
                for (Int r = 0; r < 4 && !done; ++r)
                    for (Int t = 0; t < 8 && !done; ++t) {
                        Model w = m;
                        w.translate(r, s, t);
                        if (mod(w.a[0], 2) == 0 && mod(w.a[1], 2) == 0 &&
                            mod(w.a[2], 4) == 0 && mod(w.a[3], 4) == 0 &&
                            mod(w.a[4], 8) == 0) {
                            m = w;
                            done = true;
                        }
                    }
            if (!done) throw Error("tate: step-6 normalization failed at p = 2");
        } else {
            const std::uint64_t pp = static_cast<std::uint64_t>(p);
            const Int s = mod(-m.a[0] * Int(inv_mod(2, pp)), p);
            m.translate(0, s, 0);
            const Int t = mod(-m.a[2] * Int(inv_mod(2, pp * pp)), p * p);
            m.translate(0, 0, t);
            if (mod(m.a[0], p) != 0 || mod(m.a[1], p) != 0 ||
                vP(m.a[2], p) < 2 || vP(m.a[3], p) < 2 || vP(m.a[4], p) < 3)
                throw Error("tate: step-6 normalization failed at p = " + p.str());
        }

        // cubic P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + a6/p^3 over F_p
        const CubicRoots cr = cubic_roots_mod(mod(m.a[1] / p, p),
                                              mod(m.a[3] / (p * p), p),
                                              mod(m.a[4] / (p * p * p), p), p);
        int maxmult = 0;
        Int which = 0;
        for (auto& [root, mult] : cr.roots)
            if (mult > maxmult) { maxmult = mult; which = root; }

        if (maxmult <= 1) {
            out.kodaira = KodairaType::I0star;
            out.f_p = n - 4;
            out.tamagawa = 1 + cr.distinct_in_fp();
            return out;
        }

        if (maxmult == 2) {
            // type I_m*: shift the double root of P to the origin, then probe
            // quadratics in Y and X with growing weights
            m.translate(p * which, 0, 0);
            int mm = 1;
            while (true) {
                if (mm % 2 == 1) {
                    const Int pk = pow_int(p, unsigned((mm + 3) / 2));
                    const Int pm3 = pow_int(p, unsigned(mm + 3));
                    Int dbl;
                    const int rc = quad_root_count(1, m.a[2] / pk, -(m.a[4] / pm3), p, &dbl);
                    if (rc >= 0) {
                        out.kodaira = KodairaType::Instar;
                        out.n = mm;
                        out.f_p = n - mm - 4;
                        out.tamagawa = rc > 0 ? 4 : 2;
                        return out;
                    }
                    m.translate(0, 0, pk * dbl);
                } else {
                    const Int pk = pow_int(p, unsigned((mm + 4) / 2));
                    const Int pm3 = pow_int(p, unsigned(mm + 3));
                    Int dbl;
                    const int rc = quad_root_count(m.a[1] / p, m.a[3] / pk,
                                                   m.a[4] / pm3, p, &dbl);
                    if (rc >= 0) {
                        out.kodaira = KodairaType::Instar;
                        out.n = mm;
                        out.f_p = n - mm - 4;
                        out.tamagawa = rc > 0 ? 4 : 2;
                        return out;
                    }
                    m.translate(pow_int(p, unsigned((mm + 2) / 2)) * dbl, 0, 0);
                }
                if (++mm > n) throw Error("tate: I_m* loop failed to terminate");
            }
        }

        // triple root: shift it to the origin
        m.translate(p * which, 0, 0);
        {
            const Int p2 = p * p, p4 = p2 * p2;
            Int dbl;
            const int rc = quad_root_count(1, m.a[2] / p2, -(m.a[4] / p4), p, &dbl);
            if (rc >= 0) {
                out.kodaira = KodairaType::IVstar;
                out.f_p = n - 6;
                out.tamagawa = rc > 0 ? 3 : 1;
                return out;
            }
            m.translate(0, 0, p2 * dbl);
        }
        if (vP(m.a[3], p) < 4) {
            out.kodaira = KodairaType::IIIstar;
            out.f_p = n - 7;
            out.tamagawa = 2;
            return out;
        }
        if (vP(m.a[4], p) < 6) {
            out.kodaira = KodairaType::IIstar;
            out.f_p = n - 8;
            out.tamagawa = 1;
            return out;
        }
        // not minimal at p: rescale and rerun (callers normally pass minimal models)
        for (int i = 0; i < 5; ++i) {
            static const int w[5] = {1, 2, 3, 4, 6};
            const Int pw = pow_int(p, unsigned(w[i]));
            if (m.a[size_t(i)] % pw != 0) throw Error("tate: rescale failed");
            m.a[size_t(i)] /= pw;
        }
    }
    throw Error("tate: did not terminate");
}

std::vector<LocalData> bad_local_data(const CurveQ& e_min) {
    std::vector<LocalData> out;
    for (auto& [p, e] : factorize(e_min.disc())) {
        (void)e;
        out.push_back(tate_local_data(e_min, p));
    }
    return out;
}

Int conductor(const CurveQ& e) {
    const CurveQ m = minimal_model(e);
    Int n = 1;
    for (const auto& ld : bad_local_data(m)) n *= pow_int(ld.p, unsigned(ld.f_p));
    return n;
}

Int tamagawa_product(const std::vector<LocalData>& local) {
    Int c = 1;
    for (const auto& ld : local) c *= ld.tamagawa;
    return c;
}

}  // namespace bsdlab
