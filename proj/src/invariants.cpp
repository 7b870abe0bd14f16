#include "bsdlab/invariants.hpp"

namespace bsdlab {

void VarietyInvariants::check() const {
    if (g < 1) throw DegenerateInput("invariants: g must be >= 1");
    if (d < 1) throw DegenerateInput("invariants: d must be >= 1");
    if (disc < 1) throw DegenerateInput("invariants: D_K must be >= 1");
    if (cond < 1) throw DegenerateInput("invariants: F must be >= 1");
    if (rank < 0) throw DegenerateInput("invariants: rank must be >= 0");
    if (!(eps > 0)) throw DegenerateInput("invariants: eps must be > 0");
    if (d == 1 && disc != 1)
        throw DegenerateInput("invariants: d = 1 forces D_K = 1");
}

void ConstantsConfig::check() const {
    if (!(masser_c > 0)) throw DegenerateInput("constants: masser_c must be > 0");
    if (matrix_c && !(*matrix_c > 0))
        throw DegenerateInput("constants: matrix_c must be > 0 or AUTO");
    if (!(c_tors > 0)) throw DegenerateInput("constants: c_tors must be > 0");
    if (gamma1 < 0 || gamma2 < 0 || gamma3 < 0)
        throw DegenerateInput("constants: gamma_i must be >= 0");
}

double ConstantsConfig::resolved_matrix_c(int g, int d) const {
    if (matrix_c) return *matrix_c;
    if (g == 1) {
        double b = 3.0 * d * d;
        return std::pow(b, -double(d));
    }
    return 1.0;
}

ValidatedInvariants validate(const VarietyInvariants& inv) {
    inv.check();
    const Int lhs = inv.cond * pow_int(inv.disc, unsigned(2 * inv.g));
    const Int rhs = pow_int(10, unsigned(inv.g * inv.d));
    if (lhs <= rhs)
        throw FontaineViolation("validate: F * D_K^{2g} = " + lhs.str() +
                                " <= 10^{g d} = " + rhs.str());
    return ValidatedInvariants(inv);
}

QInvariants to_q_invariants(const ValidatedInvariants& v) {
    const auto& i = v.get();
    return QInvariants{i.g * i.d, i.cond * pow_int(i.disc, unsigned(2 * i.g))};
}

}  // namespace bsdlab
