#ifndef BSDLAB_TORSION_HPP
#define BSDLAB_TORSION_HPP

#include <vector>

#include "bsdlab/curve.hpp"

namespace bsdlab {

struct TorsionInfo {
    int order = 1;
    // invariant factors (n1, n2), group = Z/n1 x Z/n2 with n1 | n2; n1 = 1 cyclic
    int n1 = 1, n2 = 1;
    std::vector<RationalPoint> generators;             // 1 or 2 points
    std::vector<RationalPoint> points;                 // all torsion points incl. O
    long injection_bound = 0;  // gcd of #E(F_p) over two odd good primes
};

// Two-odd-good-primes injection bound, then Lutz-Nagell enumeration on the
// short model with exact verification of every candidate.
TorsionInfo torsion_subgroup(const CurveQ& e);

// order of a point, or 0 when no n <= cap kills it
long point_order(const CurveQ& e, const RationalPoint& p, long cap = 16);

}  // namespace bsdlab

#endif
