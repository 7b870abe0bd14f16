#ifndef BSDLAB_MINIMAL_HPP
#define BSDLAB_MINIMAL_HPP

#include "bsdlab/curve.hpp"

namespace bsdlab {

// Global minimal Weierstrass model via Laska-Kraus-Connell; idempotent.
CurveQ minimal_model(const CurveQ& e);

// Scaling factor u of the reduction (minimal disc = disc / u^12), for tests.
CurveQ minimal_model(const CurveQ& e, Int& u_out);

// Transform a point on e to the corresponding point on minimal_model(e).
RationalPoint to_minimal(const CurveQ& e, const RationalPoint& p);

// Kraus integrality conditions on a (c4, c6) pair with 1728 | c4^3 - c6^2.
bool kraus_conditions(const Int& c4, const Int& c6);

// The unique reduced integral model with given invariants (Connell's recipe).
CurveQ curve_from_c4c6(const Int& c4, const Int& c6);

}  // namespace bsdlab

#endif
