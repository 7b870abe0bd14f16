#ifndef BSDLAB_BOUNDS_HPP
#define BSDLAB_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "bsdlab/invariants.hpp"

namespace bsdlab {

// A positive quantity stored as its natural log.  B(1) alone exceeds
// 10^8000, so linear-domain evaluation is not an option.
struct LogMagnitude {
    double ln = 0.0;

    double log10() const { return ln / 2.302585092994045684; }
    friend LogMagnitude operator*(LogMagnitude a, LogMagnitude b) { return {a.ln + b.ln}; }
    friend LogMagnitude operator/(LogMagnitude a, LogMagnitude b) { return {a.ln - b.ln}; }
    LogMagnitude pow(double e) const { return {ln * e}; }
    auto operator<=>(const LogMagnitude&) const = default;
};

inline LogMagnitude log_of(double x) {
    if (!(x > 0)) throw DegenerateInput("LogMagnitude: nonpositive value");
    return {std::log(x)};
}

enum class Assumption { FE, BSD, SZPIRO, MASSER, OOE_TOP };
std::string to_string(Assumption a);

struct BoundReport {
    std::string name;
    LogMagnitude ln_bound;
    VarietyInvariants inputs;
    ConstantsConfig constants;
    std::vector<Assumption> assumptions;
};

// --- leading coefficient of the L-series -----------------------------------

// ln[(9/2pi)^{gd} sqrt(F) D_K^g]; rank-independent
LogMagnitude leading_coeff_bound_rank(const ValidatedInvariants& inv);

// ln[2^r 4^{gd} F^{1/4} D_K^{g/2} (ln(F D_K^{2g}))^{2gd}]
LogMagnitude leading_coeff_bound_cond(const ValidatedInvariants& inv);

// --- torsion ----------------------------------------------------------------

// ln B(d), B(d) = (129 (5^d - 1)(3d)^6)^{(1+3^{d/2})^8 / (2 ln(1+3^{d/2}))}
LogMagnitude torsion_bound_elliptic(int d);

struct TorsionBound {
    LogMagnitude value;     // clamped at ln 1 = 0 (torsion orders are >= 1)
    bool vacuous = false;   // true when the raw bound fell below 1
};
// 4gd ln(c_tors ln F), bounding |A(K)_tors| * |A^(K)_tors|
TorsionBound torsion_bound_general(const ValidatedInvariants& inv,
                                   const ConstantsConfig& cfg);

// --- archimedean factor -----------------------------------------------------

// lower = ln[c_{d,g} h+^{-gd} e^{-dh}], upper = ln[2^d e^{-dh}]; h+ = max(h,1)
std::pair<LogMagnitude, LogMagnitude> archimedean_factor_bounds(
    const ValidatedInvariants& inv, const ConstantsConfig& cfg);

// --- Sha * Reg and friends --------------------------------------------------

BoundReport sha_reg_bound_general(const ValidatedInvariants& inv,
                                  const ConstantsConfig& cfg);
BoundReport sha_reg_bound_elliptic(const ValidatedInvariants& inv);

// conditional floor ln[masser_c h+^{-(2g+1)}] for hhat of non-torsion points
LogMagnitude masser_height_floor(const ValidatedInvariants& inv,
                                 const ConstantsConfig& cfg);

BoundReport generator_height_bound(const ValidatedInvariants& inv,
                                   const ConstantsConfig& cfg);
BoundReport sha_bound_naive(const ValidatedInvariants& inv,
                            const ConstantsConfig& cfg);
BoundReport sha_bound_szpiro(const ValidatedInvariants& inv,
                             const ConstantsConfig& cfg);

// Szpiro substitute for h; exposed so the composition identity is testable
double szpiro_height_substitute(const ValidatedInvariants& inv,
                                const ConstantsConfig& cfg);

// gamma1 ln F + gamma2 ln D_K + gamma3 (a rank bound, not a log of a bound)
double rank_bound_ooe_top(const ValidatedInvariants& inv,
                          const ConstantsConfig& cfg);

// --- analytic lemma ---------------------------------------------------------

// theta(n) = sum of ln p over the first n primes
double theta_chebyshev(long n);
// n <= 4 theta(p_n) / ln theta(p_n)
bool analytic_lemma_check(long n);

// ln(r!) without leaving the log domain
double ln_factorial(int r);

}  // namespace bsdlab

#endif
