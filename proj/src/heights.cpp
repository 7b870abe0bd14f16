#include "bsdlab/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bsdlab/tate.hpp"

namespace bsdlab {

namespace detail {

// elliptic log of an affine real x-coordinate: z = R_F(x-e1, x-e2, x-e3),
// defined mod lattice and up to sign (enough for |F(z)|)
template <class R>
Cx<R> elliptic_log_x(const CurveQ& e, const R& x) {
    const CubicRoots<R> rt = two_division_roots<R>(e);
    Cx<R> a, b, c;
    if (rt.nreal == 3) {
        a = {x - rt.r[0], R(0)};
        b = {x - rt.r[1], R(0)};
        c = {x - rt.r[2], R(0)};
    } else {
        a = {x - rt.r[0], R(0)};
        b = {x - rt.alpha, -rt.beta};
        c = {x - rt.alpha, rt.beta};
    }
    return carlson_rf<R>(a, b, c);
}

// doubled, Delta-stripped archimedean local height from the elliptic log:
//   lambda(z) = -2 ln |F(z)|,
//   F(z) = e^{i pi v (u + v tau)} (w1/2pi)(w^{1/2} - w^{-1/2})
//          prod_{n>=1} (1-q^n w)(1-q^n/w) / (1-q^n)^2,
// in the fundamental-domain basis (w1, tau), z = (u + v tau) w1.  |F| is
// lattice-periodic, so (u, v) may be reduced to [-1/2, 1/2).
template <class R>
R lambda_from_z(const ArchDataT<R>& ar, const Cx<R>& z) {
    using std::floor;
    using std::log;
    const R pi = boost::math::constants::pi<R>();
    const Cx<R> tau = ar.tau_fd;
    const Cx<R> s = z / ar.omega1_fd;
    R v = s.im / tau.im;
    R u = s.re - v * tau.re;
    u -= floor(u + R(1) / 2);
    v -= floor(v + R(1) / 2);
    const Cx<R> q = cx_exp(Cx<R>{-2 * pi * tau.im, 2 * pi * tau.re});
    // w^{1/2} = exp(pi i (u + v tau))
    const Cx<R> whalf = cx_exp(Cx<R>{-pi * v * tau.im, pi * (u + v * tau.re)});
    const Cx<R> winvhalf = Cx<R>{R(1), R(0)} / whalf;
    const Cx<R> w = whalf * whalf;
    R lnF = -pi * v * v * tau.im + log(cx_abs(ar.omega1_fd) / (2 * pi));
    lnF += ln_abs(whalf - winvhalf);
    Cx<R> qn{R(1), R(0)};
    const R eps = std::numeric_limits<R>::epsilon();
    const R qa = cx_abs(q), wa = cx_abs(w);
    for (int n = 1; n < 2000; ++n) {
        qn = qn * q;
        const Cx<R> t = (Cx<R>{R(1), R(0)} - qn * w) * (Cx<R>{R(1), R(0)} - qn / w);
        lnF += ln_abs(t) - 2 * ln_abs(Cx<R>{R(1), R(0)} - qn);
        const R qna = cx_abs(qn);
        if (n > 2 && qna * qa * (wa + 1 / wa) * 16 < eps) break;
    }
    return -2 * lnF;
}

template <class R>
R lambda_archimedean(const CurveQ& e, const Rat& x) {
    const ArchDataT<R> ar = periods_impl<R>(e);
    return lambda_from_z<R>(ar, elliptic_log_x<R>(e, to_real_q<R>(x)));
}

// exact rational m with lambda_p = m ln p (denominator part plus the
// correction when P reduces to a singular fiber point)
Rat local_height_multiplier(const CurveQ& e, const RationalPoint& pt, const Int& p) {
    const Rat &x = pt.x, &y = pt.y;
    const int vx = valuation(x, p);
    Rat base = vx < 0 ? Rat(-vx) : Rat(0);
    const int nD = valuation(e.disc(), p);
    if (nD == 0 || vx < 0) return base;  // good prime, or P reduces to O

    // singular reduction test: psi2 = 2y + a1 x + a3, phi = 3x^2 + 2a2 x + a4 - a1 y
    const Rat psi2 = 2 * y + Rat(e.a1()) * x + Rat(e.a3());
    const Rat phi = 3 * x * x + 2 * Rat(e.a2()) * x + Rat(e.a4()) - Rat(e.a1()) * y;
    if (valuation(psi2, p) <= 0 || valuation(phi, p) <= 0) return base;

    if (valuation(e.c4(), p) == 0) {
        // multiplicative I_n; component index min(v(psi2), n/2)
        const Rat a(valuation(psi2, p));
        const Rat m = std::min(a, Rat(nD, 2));
        return base - m * (nD - m) / nD;
    }
    // additive
    const Rat psi3 = 3 * x * x * x * x + Rat(e.b2()) * x * x * x +
                     3 * Rat(e.b4()) * x * x + 3 * Rat(e.b6()) * x + Rat(e.b8());
    const int a = valuation(psi2, p);
    const int b3 = valuation(psi3, p);
    if (b3 >= 3 * a) return base - Rat(2 * a, 3);
    return base - Rat(b3, 4);
}

std::set<Int> height_primes(const CurveQ& e, const RationalPoint& p) {
    std::set<Int> ps;
    for (auto& [q, k] : factorize(e.disc())) {
        (void)k;
        ps.insert(q);
    }
    for (auto& [q, k] : factorize(rat_den(p.x))) {
        (void)k;
        ps.insert(q);
    }
    return ps;
}

}  // namespace detail

double naive_height(const Rat& x) {
    const Int n = abs(rat_num(x)), d = rat_den(x);
    return ln_big(max(max(n, d), Int(1)));
}

double naive_height_point(const RationalPoint& p) {
    return p.infinity ? 0.0 : naive_height(p.x);
}

double local_height_archimedean(const CurveQ& e, const RationalPoint& p) {
    if (p.infinity) throw NonRationalPoint("local height of O");
    return detail::lambda_archimedean<double>(e, p.x);
}

double local_height_at(const CurveQ& e, const RationalPoint& pt, const Int& p) {
    return to_double(detail::local_height_multiplier(e, pt, p)) * ln_big(p);
}

double canonical_height(const CurveQ& e, const RationalPoint& p) {
    if (!e.contains(p)) throw NonRationalPoint("canonical_height: point not on curve");
    if (p.infinity) return 0.0;
    double h = local_height_archimedean(e, p);
    for (const Int& q : detail::height_primes(e, p)) h += local_height_at(e, p, q);
    // torsion heights are exactly zero; snap numerical dust
    if (std::fabs(h) < 1e-12) h = 0.0;
    return h;
}

Ext canonical_height_ext(const CurveQ& e, const RationalPoint& p) {
    if (!e.contains(p)) throw NonRationalPoint("canonical_height: point not on curve");
    if (p.infinity) return Ext(0);
    Ext h = detail::lambda_archimedean<Ext>(e, p.x);
    for (const Int& q : detail::height_primes(e, p))
        h += Ext(detail::local_height_multiplier(e, p, q)) * log(Ext(q));
    return h;
}

double height_pairing(const CurveQ& e, const RationalPoint& p, const RationalPoint& q) {
    const RationalPoint s = e.add(p, q);
    const double hs = s.infinity ? 0.0 : canonical_height(e, s);
    return (hs - canonical_height(e, p) - canonical_height(e, q)) / 2.0;
}

std::vector<std::vector<double>> gram_matrix(const CurveQ& e,
                                             const std::vector<RationalPoint>& pts) {
    const size_t r = pts.size();
    std::vector<std::vector<double>> g(r, std::vector<double>(r, 0.0));
    std::vector<double> h(r);
    for (size_t i = 0; i < r; ++i) {
        h[i] = canonical_height(e, pts[i]);
        g[i][i] = h[i];
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            const RationalPoint s = e.add(pts[i], pts[j]);
            const double hs = s.infinity ? 0.0 : canonical_height(e, s);
            g[i][j] = g[j][i] = (hs - h[i] - h[j]) / 2.0;
        }
    return g;
}

double det(std::vector<std::vector<double>> m) {
    const size_t n = m.size();
    double d = 1.0;
    for (size_t i = 0; i < n; ++i) {
        size_t piv = i;
        for (size_t k = i + 1; k < n; ++k)
            if (std::fabs(m[k][i]) > std::fabs(m[piv][i])) piv = k;
        if (std::fabs(m[piv][i]) < 1e-300) return 0.0;
        if (piv != i) {
            std::swap(m[piv], m[i]);
            d = -d;
        }
        d *= m[i][i];
        for (size_t k = i + 1; k < n; ++k) {
            const double f = m[k][i] / m[i][i];
            for (size_t j = i; j < n; ++j) m[k][j] -= f * m[i][j];
        }
    }
    return d;
}

double regulator(const CurveQ& e, const std::vector<RationalPoint>& pts) {
    if (pts.empty()) return 1.0;
    return det(gram_matrix(e, pts));
}

double height_difference_bound(const CurveQ& e) {
    // archimedean: sup over E(R) of ln+|x| - lambda_inf(x), by a log-spaced
    // scan of the unbounded component plus the egg, with a safety margin
    const ArchData ar = detail::periods_impl<double>(e);
    const CubicRoots<double> rt = detail::two_division_roots<double>(e);
    double sup = 0.0;
    auto probe = [&](double x) {
        const double lam =
            detail::lambda_from_z<double>(ar, detail::elliptic_log_x<double>(e, x));
        const double d = std::max(0.0, std::log(std::fabs(x))) - lam;
        sup = std::max(sup, d);
    };
    const double e1 = rt.r[0];
    for (int k = -60; k <= 90; ++k) probe(e1 + std::pow(10.0, k / 8.0));
    if (rt.nreal == 3) {
        const double e3 = rt.r[2], e2 = rt.r[1];
        for (int k = 1; k < 96; ++k) probe(e3 + (e2 - e3) * k / 96.0);
    }
    double delta = sup + 0.3;  // grid-resolution margin

    // non-archimedean: worst component correction per bad fiber
    for (const auto& ld : bad_local_data(e)) {
        const double lnp = ln_big(ld.p);
        switch (ld.kodaira) {
            case KodairaType::In:
                delta += (double(ld.n) / 4.0) * lnp;
                break;
            case KodairaType::Instar:
                delta += (1.0 + ld.n / 4.0) * lnp;
                break;
            case KodairaType::III:
                delta += 0.5 * lnp;
                break;
            case KodairaType::IIIstar:
                delta += 1.5 * lnp;
                break;
            case KodairaType::IV:
                delta += (2.0 / 3.0) * lnp;
                break;
            case KodairaType::IVstar:
                delta += (4.0 / 3.0) * lnp;
                break;
            default:
                break;  // I0, II, II*: trivial component group
        }
    }
    return delta;
}

}  // namespace bsdlab
