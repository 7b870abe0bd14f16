#ifndef BSDLAB_LSERIES_HPP
#define BSDLAB_LSERIES_HPP

#include <vector>

#include "bsdlab/curve.hpp"
#include "bsdlab/tate.hpp"

namespace bsdlab {

struct DirichletCoefficients {
    long n_max = 0;
    std::vector<long> a;  // a[1..n_max]; a[0] unused

    long operator[](long n) const { return a[size_t(n)]; }
};

struct LeadingCoefficient {
    int analytic_order = 0;  // 0 or 1
    double value = 0.0;      // L^{(r)}(1) / r!
    int root_number = +1;
    double truncation_error = 0.0;
    long n_max = 0;
};

// a_n for n <= n_max: a_p from counting at good p, Euler rules at bad p
// (+1 split, -1 nonsplit, 0 additive), extended multiplicatively
DirichletCoefficients coefficients(const CurveQ& e_min, long n_max);

// sign of the functional equation, detected numerically at t = 1.1, 1.3;
// throws Inconclusive when neither sign fits
int root_number(const CurveQ& e_min);

// L(1) = 2 sum (a_n/n) e^{-2 pi n / sqrt N}; requires root number +1
LeadingCoefficient l_value_at_1(const CurveQ& e_min, double tol = 1e-10);

// L'(1) = 2 sum (a_n/n) E1(2 pi n / sqrt N); requires root number -1
LeadingCoefficient l_derivative_at_1(const CurveQ& e_min, double tol = 1e-10);

// dispatch on the root number; throws OrderTooHigh when the value at the
// forced parity vanishes to tolerance (analytic order >= 2)
LeadingCoefficient leading_coefficient(const CurveQ& e_min, double tol = 1e-10);

}  // namespace bsdlab

#endif
