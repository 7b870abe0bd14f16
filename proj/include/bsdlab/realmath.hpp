#ifndef BSDLAB_REALMATH_HPP
#define BSDLAB_REALMATH_HPP

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>

#include "bsdlab/numutil.hpp"

namespace bsdlab {

template <class R>
R to_real(const Int& n) {
    return static_cast<R>(Ext(n));
}
template <>
inline double to_real<double>(const Int& n) {
    return static_cast<double>(Ext(n));
}

template <class R>
R to_real_q(const Rat& q) {
    return static_cast<R>(Ext(q));
}

// minimal complex type; std::complex is only specified for builtin floats
template <class R>
struct Cx {
    R re{}, im{};

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const R& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator*(const Cx& a, const R& s) { return {s * a.re, s * a.im}; }
    friend Cx operator/(const Cx& a, const R& s) { return {a.re / s, a.im / s}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        const R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

template <class R>
R cx_abs(const Cx<R>& z) {
    using std::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

// principal branch
template <class R>
Cx<R> cx_sqrt(const Cx<R>& z) {
    using std::sqrt;
    const R m = cx_abs(z);
    if (m == 0) return {R(0), R(0)};
    const R w = sqrt((m + z.re) / 2);
    if (w == 0) return {R(0), sqrt(m)};  // negative real axis
    return {w, z.im / (2 * w)};          // sign of im carries through
}

template <class R>
Cx<R> cx_exp(const Cx<R>& z) {
    using std::exp;
    using std::cos;
    using std::sin;
    const R e = exp(z.re);
    return {e * cos(z.im), e * sin(z.im)};
}

template <class R>
R ln_abs(const Cx<R>& z) {
    using std::log;
    return log(cx_abs(z));
}

// arithmetic-geometric mean of positive reals
template <class R>
R agm(R a, R b) {
    using std::sqrt;
    using std::fabs;
    const R eps = std::numeric_limits<R>::epsilon() * 8;
    for (int i = 0; i < 200; ++i) {
        const R am = (a + b) / 2, gm = sqrt(a * b);
        a = am;
        b = gm;
        if (fabs(a - b) <= eps * fabs(a)) break;
    }
    return (a + b) / 2;
}

// Carlson symmetric integral R_F with principal branches
template <class R>
Cx<R> carlson_rf(Cx<R> x, Cx<R> y, Cx<R> z) {
    const R third = R(1) / 3;
    const Cx<R> x0 = x, y0 = y;
    Cx<R> A = third * (x + y + z);
    const Cx<R> A0 = A;
    R q = cx_abs(A - x);
    q = std::max(q, cx_abs(A - y));
    q = std::max(q, cx_abs(A - z));
    using std::pow;
    const R eps = std::numeric_limits<R>::epsilon();
    q = q * pow(3 * eps, -third / 2);  // (3 eps)^{-1/6} scale
    R scale = 1;
    for (int m = 0; m < 120 && q > scale * cx_abs(A); ++m) {
        const Cx<R> sx = cx_sqrt(x), sy = cx_sqrt(y), sz = cx_sqrt(z);
        const Cx<R> lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / R(4);
        y = (y + lam) / R(4);
        z = (z + lam) / R(4);
        A = (A + lam) / R(4);
        scale *= 4;
    }
    const Cx<R> X = (A0 - x0) / (scale * A);
    const Cx<R> Y = (A0 - y0) / (scale * A);
    const Cx<R> Z = -(X + Y);
    const Cx<R> E2 = X * Y - Z * Z;
    const Cx<R> E3 = X * Y * Z;
    // 1 - E2/10 + E3/14 + E2^2/24 - 3 E2 E3/44
    Cx<R> ser = Cx<R>{R(1), R(0)} - E2 / R(10) + E3 / R(14) + (E2 * E2) / R(24) -
                (R(3) / R(44)) * (E2 * E3);
    // A^{-1/2}
    const Cx<R> rsA = cx_sqrt(A);
    return ser / rsA;
}

// roots of the monic cubic x^3 + B x^2 + C x + D with real coefficients;
// returns the real roots in r[] (count nreal, descending) and, when nreal = 1,
// the complex pair alpha +- i beta
template <class R>
struct CubicRoots {
    int nreal = 0;
    R r[3];
    R alpha{}, beta{};
};

template <class R>
R polish_cubic(const R& B, const R& C, const R& D, R x) {
    // a few Newton steps
    for (int i = 0; i < 8; ++i) {
        const R f = ((x + B) * x + C) * x + D;
        const R fp = (3 * x + 2 * B) * x + C;
        if (fp == 0) break;
        x = x - f / fp;
    }
    return x;
}

template <class R>
CubicRoots<R> cubic_roots(const R& B, const R& C, const R& D) {
    using std::sqrt;
    using std::acos;
    using std::cos;
    using std::cbrt;
    using std::pow;
    using std::fabs;
    CubicRoots<R> out;
    const R third = R(1) / 3;
    const R p = C - B * B * third;
    const R q = D - B * C * third + 2 * B * B * B * third * third * third;
    const R disc = -4 * p * p * p - 27 * q * q;
    const R shift = -B * third;
    if (disc > 0) {
        // three real roots (p < 0 here)
        const R m = 2 * sqrt(-p * third);
        R arg = 3 * q / (p * m);
        if (arg > 1) arg = 1;
        if (arg < -1) arg = -1;
        const R theta = acos(arg);
        const R twopi3 = 2 * boost::math::constants::pi<R>() * third;
        for (int k = 0; k < 3; ++k)
            out.r[k] = polish_cubic(B, C, D, m * cos(theta * third - twopi3 * k) + shift);
        std::sort(out.r, out.r + 3, [](const R& a, const R& b) { return a > b; });
        out.nreal = 3;
    } else {
        R u3 = -q / 2, rad = sqrt(-disc / R(108));
        u3 += (u3 >= 0 ? rad : -rad);
        R u;
        if (u3 == 0) {
            u = 0;
        } else {
            u = pow(fabs(u3), third);
            if (u3 < 0) u = -u;
        }
        const R v = (u == 0) ? R(0) : -p / (3 * u);
        out.r[0] = polish_cubic(B, C, D, u + v + shift);
        out.nreal = 1;
        // remaining quadratic by synthetic division: x^2 + q1 x + q0
        const R q1 = B + out.r[0];
        const R q0 = C + out.r[0] * q1;
        out.alpha = -q1 / 2;
        const R b2 = q0 - out.alpha * out.alpha;
        out.beta = b2 > 0 ? sqrt(b2) : R(0);
    }
    return out;
}

// exponential integral E1(x), x > 0: series for small x, continued fraction
// (modified Lentz) for large
template <class R>
R exp_integral_e1(const R& x) {
    using std::log;
    using std::exp;
    using std::fabs;
    if (!(x > 0)) throw DegenerateInput("E1: x > 0 required");
    const R eps = std::numeric_limits<R>::epsilon();
    if (x <= R(3) / 2) {
        const R gamma = boost::math::constants::euler<R>();
        R sum = 0, term = 1;
        for (int k = 1; k < 500; ++k) {
            term *= -x / k;
            const R add = -term / k;
            sum += add;
            if (fabs(add) < eps * (fabs(sum) + 1)) break;
        }
        return -gamma - log(x) + sum;
    }
    // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...)))), evaluated
    // bottom-up at fixed depth (convergence improves with x; 300 levels keep
    // full double precision down to the series seam)
    R tail = 0;
    for (int j = 300; j >= 1; --j) tail = R(j) * R(j) / (x + 2 * j + 1 - tail);
    return exp(-x) / (x + 1 - tail);
}

}  // namespace bsdlab

#endif
