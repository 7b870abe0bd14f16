#include "bsdlab/periods.hpp"

namespace bsdlab {

ArchData real_period_and_components(const CurveQ& e_min) {
    ArchData a = detail::periods_impl<double>(e_min);
    if (a.tau_fd.im < 0.866025403784438646 - 1e-12)
        throw Error("periods: reduced tau outside the fundamental domain");
    return a;
}

Cx<double> tau_in_fundamental_domain(const CurveQ& e_min) {
    return real_period_and_components(e_min).tau_fd;
}

double faltings_height(const CurveQ& e_min) {
    return detail::faltings_height_impl<double>(e_min);
}

ArchDataT<Ext> real_period_and_components_ext(const CurveQ& e_min) {
    return detail::periods_impl<Ext>(e_min);
}

Ext faltings_height_ext(const CurveQ& e_min) {
    return detail::faltings_height_impl<Ext>(e_min);
}

}  // namespace bsdlab
