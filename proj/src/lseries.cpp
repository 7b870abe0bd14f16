#include "bsdlab/lseries.hpp"

#include <cmath>

#include "bsdlab/counting.hpp"
#include "bsdlab/minimal.hpp"
#include "bsdlab/realmath.hpp"

namespace bsdlab {

namespace {

constexpr double PI = 3.14159265358979323846;

// n_max so that the tail sum_{n > M} n e^{-c n} (|a_n| <= n) stays below tol
long pick_n_max(double c, double tol) {
    long m = 16;
    while (m < 2'000'000) {
        const double tail = (m + 1 + 1.0 / c) * std::exp(-c * (m + 1)) / c;
        if (tail < tol) return m;
        m += m / 2 + 8;
    }
    throw Error("lseries: series will not converge at this tolerance");
}

}  // namespace

DirichletCoefficients coefficients(const CurveQ& e, long n_max) {
    if (n_max < 1) throw DegenerateInput("coefficients: n_max >= 1");
    DirichletCoefficients out;
    out.n_max = n_max;
    out.a.assign(size_t(n_max) + 1, 0);
    out.a[1] = 1;
    if (n_max == 1) return out;

    // smallest prime factor sieve
    std::vector<std::int32_t> spf(size_t(n_max) + 1, 0);
    for (long i = 2; i <= n_max; ++i) {
        if (spf[size_t(i)] == 0)
            for (long j = i; j <= n_max; j += i)
                if (spf[size_t(j)] == 0) spf[size_t(j)] = std::int32_t(i);
    }

    std::vector<bool> bad(size_t(n_max) + 1, false);
    for (long p = 2; p <= n_max; ++p)
        if (spf[size_t(p)] == long(p) && mod_u64(e.disc(), std::uint64_t(p)) == 0)
            bad[size_t(p)] = true;

    for (long n = 2; n <= n_max; ++n) {
        const long p = spf[size_t(n)];
        long m = n, pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        if (m > 1) {
            out.a[size_t(n)] = out.a[size_t(m)] * out.a[size_t(pk)];
            continue;
        }
        if (pk == p) {
            if (bad[size_t(p)]) {
                const LocalData ld = tate_local_data(e, Int(p));
                out.a[size_t(n)] =
                    ld.reduction == ReductionType::split_mult   ? 1
                    : ld.reduction == ReductionType::nonsplit_mult ? -1
                                                                   : 0;
            } else {
                out.a[size_t(n)] = ap(e, std::uint32_t(p));
            }
            continue;
        }
        // prime power recursion
        if (bad[size_t(p)]) {
            out.a[size_t(n)] = out.a[size_t(p)] * out.a[size_t(pk / p)];
        } else {
            out.a[size_t(n)] = out.a[size_t(p)] * out.a[size_t(pk / p)] -
                               p * out.a[size_t(pk / p / p)];
        }
    }
    return out;
}

int root_number(const CurveQ& e) {
    const Int N = conductor(e);
    const double c = 2.0 * PI / std::sqrt(static_cast<double>(Ext(N)));
    // need g(1/1.3): slowest decay at c/1.3
    const long n_max = pick_n_max(c / 1.3, 1e-13);
    const DirichletCoefficients a = coefficients(e, n_max);
    auto g = [&](double t) {
        double s = 0;
        for (long n = n_max; n >= 1; --n) s += a[n] * std::exp(-c * n * t);
        return s;
    };
    // g(1/t) = eps t^2 g(t); t = 1 is degenerate and never used
    double resid[2] = {0, 0};
    double scale = 0;
    for (double t : {1.1, 1.3}) {
        const double lhs = g(1.0 / t), rhs = t * t * g(t);
        resid[0] += std::fabs(lhs - rhs);
        resid[1] += std::fabs(lhs + rhs);
        scale += std::fabs(lhs);
    }
    if (resid[0] < 1e-6 * scale && resid[1] > 1e-6 * scale) return +1;
    if (resid[1] < 1e-6 * scale && resid[0] > 1e-6 * scale) return -1;
    throw Inconclusive("root_number: neither sign fits; coefficients or conductor wrong?");
}

LeadingCoefficient l_value_at_1(const CurveQ& e, double tol) {
    const int eps = root_number(e);
    if (eps != +1) throw WrongSign("l_value_at_1: root number is -1");
    const Int N = conductor(e);
    const double c = 2.0 * PI / std::sqrt(static_cast<double>(Ext(N)));
    const long n_max = pick_n_max(c, tol / 4.0);
    const DirichletCoefficients a = coefficients(e, n_max);
    double s = 0;
    for (long n = n_max; n >= 1; --n)
        if (a[n]) s += double(a[n]) / double(n) * std::exp(-c * n);
    LeadingCoefficient out;
    out.analytic_order = 0;
    out.value = 2.0 * s;
    out.root_number = +1;
    out.truncation_error = tol;
    out.n_max = n_max;
    return out;
}

LeadingCoefficient l_derivative_at_1(const CurveQ& e, double tol) {
    const int eps = root_number(e);
    if (eps != -1) throw WrongSign("l_derivative_at_1: root number is +1");
    const Int N = conductor(e);
    const double c = 2.0 * PI / std::sqrt(static_cast<double>(Ext(N)));
    const long n_max = pick_n_max(c, tol / 4.0);  // E1(x) <= e^{-x} for x >= 1-ish
    const DirichletCoefficients a = coefficients(e, n_max);
    double s = 0;
    for (long n = n_max; n >= 1; --n)
        if (a[n]) s += double(a[n]) / double(n) * exp_integral_e1(c * n);
    LeadingCoefficient out;
    out.analytic_order = 1;
    out.value = 2.0 * s;
    out.root_number = -1;
    out.truncation_error = tol;
    out.n_max = n_max;
    return out;
}

LeadingCoefficient leading_coefficient(const CurveQ& e, double tol) {
    const int eps = root_number(e);
    LeadingCoefficient lc = eps == +1 ? l_value_at_1(e, tol) : l_derivative_at_1(e, tol);
    if (!(lc.value > tol * 10))
        throw OrderTooHigh("leading_coefficient: analytic order >= 2 (value " +
                           std::to_string(lc.value) + " below threshold)");
    return lc;
}

}  // namespace bsdlab
