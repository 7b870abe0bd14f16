#ifndef BSDLAB_HEIGHTS_HPP
#define BSDLAB_HEIGHTS_HPP

#include <vector>

#include "bsdlab/curve.hpp"
#include "bsdlab/periods.hpp"

namespace bsdlab {

// naive height of a rational: ln max(|num|, den)
double naive_height(const Rat& x);
double naive_height_point(const RationalPoint& p);  // 0 at infinity

// Neron-Tate height, normalized as hhat(P) = lim h(x(2^n P)) / 4^n, computed
// by local decomposition (theta products at infinity, reduction data at p).
// Expects a globally minimal model; throws NonRationalPoint if P is off e.
double canonical_height(const CurveQ& e_min, const RationalPoint& p);

// archimedean local part (Delta-stripped doubled normalization)
double local_height_archimedean(const CurveQ& e_min, const RationalPoint& p);
// non-archimedean local part at p, including the denominator contribution
double local_height_at(const CurveQ& e_min, const RationalPoint& pt, const Int& p);

// Neron-Tate pairing <P,Q> = (hhat(P+Q) - hhat(P) - hhat(Q))/2
double height_pairing(const CurveQ& e_min, const RationalPoint& p,
                      const RationalPoint& q);

// Gram matrix of the pairing
std::vector<std::vector<double>> gram_matrix(const CurveQ& e_min,
                                             const std::vector<RationalPoint>& pts);

// det of the Gram matrix; 1 for an empty list
double regulator(const CurveQ& e_min, const std::vector<RationalPoint>& pts);

double det(std::vector<std::vector<double>> m);

// one-sided bound: h(x(P)) - hhat(P) <= delta for all rational P; computed
// from an archimedean scan over E(R) plus worst-case fiber corrections
double height_difference_bound(const CurveQ& e_min);

// extended-precision canonical height (golden-file generation)
Ext canonical_height_ext(const CurveQ& e_min, const RationalPoint& p);

}  // namespace bsdlab

#endif
