#ifndef BSDLAB_INVARIANTS_HPP
#define BSDLAB_INVARIANTS_HPP

#include <optional>
#include <string>

#include "bsdlab/numutil.hpp"

namespace bsdlab {

// The tuple (g, d, D_K, F, h, r) every bound formula consumes.
struct VarietyInvariants {
    int g = 1;          // dimension
    int d = 1;          // degree [K:Q]
    Int disc = 1;       // D_K, absolute value of the field discriminant
    Int cond = 1;       // F = N_{K/Q} F_{A/K}
    double faltings = 0.0;  // h, may be negative
    int rank = 0;       // Mordell-Weil rank or analytic order
    double eps = 0.01;  // the epsilon of the Szpiro-conditional bound

    void check() const;  // throws DegenerateInput on type-invariant violations
};

// Invariants of A' = Res_{K/Q} A: g' = g d, N = F * D_K^{2g}.
struct QInvariants {
    int g_prime;
    Int n;
};

// Every unspecified constant of the bound formulas lives here.
struct ConstantsConfig {
    double masser_c = 1.0;                  // c_{[K:Q]} of the height floor
    std::optional<double> matrix_c = {};    // c_{[K:Q],g}; empty = AUTO
    double c_tors = 1.0;                    // C_tors of the torsion bound
    double gamma1 = 0.0, gamma2 = 0.0, gamma3 = 0.0;  // rank bound, 0 = disabled
    double szpiro_c_eps_d = 0.0;            // c_{eps,[K:Q]} additive constant

    void check() const;
    // AUTO resolves to (3 d^2)^{-d} when g=1, else 1
    double resolved_matrix_c(int g, int d) const;
};

// Wrapper certifying the Fontaine check F * D_K^{2g} > 10^{g d}; the bounds
// module accepts only validated inputs.
class ValidatedInvariants {
  public:
    const VarietyInvariants& get() const { return inv_; }
    const VarietyInvariants* operator->() const { return &inv_; }

  private:
    friend ValidatedInvariants validate(const VarietyInvariants&);
    explicit ValidatedInvariants(const VarietyInvariants& inv) : inv_(inv) {}
    VarietyInvariants inv_;
};

ValidatedInvariants validate(const VarietyInvariants& inv);
QInvariants to_q_invariants(const ValidatedInvariants& inv);

}  // namespace bsdlab

#endif
