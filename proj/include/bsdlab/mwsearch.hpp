#ifndef BSDLAB_MWSEARCH_HPP
#define BSDLAB_MWSEARCH_HPP

#include <cstdint>
#include <vector>

#include "bsdlab/bounds.hpp"
#include "bsdlab/curve.hpp"
#include "bsdlab/heights.hpp"

namespace bsdlab {

struct MWBasis {
    std::vector<RationalPoint> points;           // sorted by increasing height
    std::vector<std::vector<double>> gram;       // Neron-Tate pairings
    double regulator = 1.0;
    std::vector<double> heights_sorted;
};

struct SearchCertificate {
    double cutoff_canonical = 0.0;  // log-domain Theorem-1.1 bound value
    double cutoff_naive = 0.0;      // + naive-vs-canonical difference bound
    std::uint64_t points_scanned = 0;   // (m, e) pairs examined
    std::uint64_t square_tests = 0;     // candidates surviving the mod sieve
    double minkowski_lhs = 0.0;     // prod hhat(P_i)
    double minkowski_rhs = 0.0;     // (r!)^4 Reg
    bool minkowski_ok = true;
    BoundReport cutoff_bound;       // the conditional bound behind the cutoff
};

struct SearchStats {
    std::uint64_t scanned = 0;
    std::uint64_t tested = 0;
};

// All affine points with naive height h(x) <= cutoff: x = m/e^2 with
// |m|, e^2 <= e^cutoff, quadratic condition decided exactly; one
// representative per {P, -P}.  The budget caps post-sieve square tests.
std::vector<RationalPoint> search_points(const CurveQ& e_min, double cutoff,
                                         std::uint64_t budget = 10'000'000,
                                         SearchStats* stats = nullptr);

// Torsion filtered out (hhat < 1e-10), greedy selection by height with a
// nondegenerate Gram, then LLL on the Gram matrix; throws InsufficientPoints
// when fewer than r_expected independent points survive.
MWBasis extract_basis(const CurveQ& e_min, const std::vector<RationalPoint>& pts,
                      int r_expected);

struct ManinOptions {
    std::optional<double> cutoff_override;  // canonical-height cutoff
    std::uint64_t budget = 10'000'000;
    std::optional<int> rank_override;
    double rank_zero_cutoff = 2.0;  // nominal scan when the free part is trivial
};

// Theorem-1.1 cutoff from the curve's own invariants, search, extraction,
// Minkowski certificate.
std::pair<MWBasis, SearchCertificate> manin_procedure(const CurveQ& e,
                                                      const ManinOptions& opt,
                                                      const ConstantsConfig& cfg);

}  // namespace bsdlab

#endif
