#ifndef BSDLAB_BSDCHECK_HPP
#define BSDLAB_BSDCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsdlab/bounds.hpp"
#include "bsdlab/curve.hpp"
#include "bsdlab/heights.hpp"
#include "bsdlab/lseries.hpp"
#include "bsdlab/tate.hpp"

namespace bsdlab {

// Every factor of the BSD leading-coefficient formula, computed independently:
// L* = |Sha| Reg |T|^-1 |T^|^-1 c_inf prod(c_v) D_K^{-g/2}
struct BsdTerms {
    std::string label;
    double l_star = 0.0;
    int analytic_order = 0;
    bool external_l_star = false;   // rank >= 2 value supplied by the caller
    double omega_c_infty = 0.0;
    Int tamagawa_product = 1;
    int torsion_order = 1;
    int torsion_dual_order = 1;     // = torsion_order for elliptic curves
    double regulator = 1.0;
    double disc_factor = 1.0;       // D_K^{-g/2} = 1 over Q
    double sha_predicted = 0.0;
    double sha_nearest_integer_gap = 0.0;
    bool sha_nearest_is_square = false;
    std::vector<std::string> warnings;  // e.g. RankMismatch

    // curve-derived context for the bound checks
    Int conductor = 1;
    double faltings = 0.0;
    std::vector<double> generator_heights;
};

BsdTerms assemble(const CurveQ& e, const std::vector<RationalPoint>& generators,
                  std::optional<double> external_l_star = std::nullopt);

struct CheckResult {
    std::string name;
    bool pass = false;
    bool hard = true;     // soft checks only annotate the report
    double lhs = 0.0, rhs = 0.0;   // lhs <= rhs is the asserted relation
    std::string note;
};

struct VerificationReport {
    std::string label;
    std::vector<CheckResult> checks;
    double implied_masser_c = 0.0;  // hhat_min * h+^{2g+1} over generators
    double implied_c_tors = 0.0;    // (T T^)^{1/(4gd)} / ln F
    bool all_hard_pass = true;
};

// the bound checks (i)-(v) of the verification harness
VerificationReport verify_against_bounds(const BsdTerms& terms,
                                         const ValidatedInvariants& inv,
                                         const ConstantsConfig& cfg);

// invariants of the g = 1, K = Q curve behind the terms
VarietyInvariants invariants_of(const BsdTerms& terms, double eps = 0.01);

}  // namespace bsdlab

#endif
