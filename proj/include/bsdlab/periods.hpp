#ifndef BSDLAB_PERIODS_HPP
#define BSDLAB_PERIODS_HPP

#include "bsdlab/curve.hpp"
#include "bsdlab/realmath.hpp"

namespace bsdlab {

// Archimedean data of a minimal model.  Both period-basis conventions are
// kept: (omega1, omega2) with omega1 the least positive real period and
// tau_rc = omega2/omega1 its ratio, and the fundamental-domain tau with its
// own basis vector omega1_fd (used by the eta-product formulas).
template <class R>
struct ArchDataT {
    R omega1{};               // least positive real period
    Cx<R> omega2{};           // second period: i y (disc > 0) or omega1/2 + i b
    Cx<R> tau_rc{};           // omega2 / omega1
    Cx<R> tau_fd{};           // SL2(Z)-reduced: |Re| <= 1/2, |tau| >= 1
    Cx<R> omega1_fd{};        // basis vector whose ratio partner gives tau_fd
    int real_components = 1;  // 2 iff disc > 0
    R c_inf{};                // 2^eps * omega1, the archimedean BSD factor
    R covolume{};             // |Im(conj(omega1) omega2)|
};

using ArchData = ArchDataT<double>;

namespace detail {

// roots of x^3 + (b2/4) x^2 + (b4/2) x + (b6/4), shared by periods and logs
template <class R>
CubicRoots<R> two_division_roots(const CurveQ& e) {
    return cubic_roots<R>(to_real<R>(e.b2()) / 4, to_real<R>(e.b4()) / 2,
                          to_real<R>(e.b6()) / 4);
}

template <class R>
ArchDataT<R> periods_impl(const CurveQ& e) {
    using std::sqrt;
    using std::floor;
    const R pi = boost::math::constants::pi<R>();
    ArchDataT<R> out;
    const CubicRoots<R> rt = two_division_roots<R>(e);
    if (e.disc() > 0) {
        // rectangular lattice: Omega1 = pi/agm(sqrt(e1-e3), sqrt(e1-e2))
        const R e1 = rt.r[0], e2 = rt.r[1], e3 = rt.r[2];
        out.omega1 = pi / agm<R>(sqrt(e1 - e3), sqrt(e1 - e2));
        const R y = pi / agm<R>(sqrt(e1 - e3), sqrt(e2 - e3));
        out.omega2 = {R(0), y};
        out.real_components = 2;
    } else {
        // rhombic: one real two-division point e1, complex pair alpha +- i beta
        const R e1 = rt.r[0], c = e1 - rt.alpha;
        const R A = sqrt(c * c + rt.beta * rt.beta);
        out.omega1 = pi / agm<R>(sqrt((A + c) / 2), sqrt(A));
        const R b = pi / (2 * agm<R>(sqrt((A - c) / 2), sqrt(A)));
        out.omega2 = {out.omega1 / 2, b};
        out.real_components = 1;
    }
    out.tau_rc = out.omega2 / Cx<R>{out.omega1, R(0)};
    out.c_inf = out.omega1 * (out.real_components == 2 ? 2 : 1);
    out.covolume = out.omega1 * out.omega2.im;

    // fundamental-domain reduction, tracking the basis change
    // tau' = (a tau + b)/(c tau + d); new omega1 = c omega2 + d omega1
    Cx<R> t = out.tau_rc;
    long a = 1, bq = 0, cq = 0, d = 1;
    for (int i = 0; i < 256; ++i) {
        const R n = floor(t.re + R(1) / 2);
        t.re -= n;
        const long ln = long(n);
        a -= ln * cq;
        bq -= ln * d;
        if (cx_abs(t) < 1 - std::numeric_limits<R>::epsilon() * 64) {
            t = Cx<R>{R(-1), R(0)} / t;
            const long na = cq, nb = d;
            cq = -a;
            d = -bq;
            a = na;
            bq = nb;
        } else {
            break;
        }
    }
    out.tau_fd = t;
    out.omega1_fd = Cx<R>{R(cq), R(0)} * out.omega2 + Cx<R>{R(d) * out.omega1, R(0)};
    return out;
}

// ln |Delta(tau)| with Delta = (2pi)^12 q prod (1-q^n)^24 (fundamental-domain tau)
template <class R>
R ln_abs_modular_disc(const Cx<R>& tau) {
    using std::log;
    const R pi = boost::math::constants::pi<R>();
    const Cx<R> q = cx_exp(Cx<R>{-2 * pi * tau.im, 2 * pi * tau.re});
    R acc = 12 * log(2 * pi) - 2 * pi * tau.im;  // ln|q| = -2 pi Im tau
    Cx<R> qn{R(1), R(0)};
    const R eps = std::numeric_limits<R>::epsilon();
    for (int n = 1; n < 4000; ++n) {
        qn = qn * q;
        acc += 24 * ln_abs(Cx<R>{R(1), R(0)} - qn);
        if (cx_abs(qn) * 64 < eps) break;
    }
    return acc;
}

template <class R>
R faltings_height_impl(const CurveQ& e) {
    using std::log;
    const ArchDataT<R> ar = periods_impl<R>(e);
    return (log(to_real<R>(abs(e.disc()))) - 6 * log(ar.tau_fd.im) -
            ln_abs_modular_disc<R>(ar.tau_fd)) / 12;
}

}  // namespace detail

// AGM periods of a minimal model (double precision front end)
ArchData real_period_and_components(const CurveQ& e_min);

// tau in the fundamental domain; asserts Im tau >= sqrt(3)/2
Cx<double> tau_in_fundamental_domain(const CurveQ& e_min);

// h = (1/12)[ln|disc| - 6 ln Im tau - ln|Delta(tau)|], the eta-product route;
// equals -(1/2) ln covolume
double faltings_height(const CurveQ& e_min);

// extended-precision variants for golden-file generation / cross-checks
ArchDataT<Ext> real_period_and_components_ext(const CurveQ& e_min);
Ext faltings_height_ext(const CurveQ& e_min);

}  // namespace bsdlab

#endif
