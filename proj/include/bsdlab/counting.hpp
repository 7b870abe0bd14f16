#ifndef BSDLAB_COUNTING_HPP
#define BSDLAB_COUNTING_HPP

#include <cstdint>

#include "bsdlab/curve.hpp"

namespace bsdlab {

// a_p = p + 1 - #E(F_p) by naive counting with a quadratic-residue table.
// Throws BadReduction when p | disc (callers use the Euler factor rules).
long ap(const CurveQ& e, std::uint32_t p);

// #E(F_p) including the point at infinity; good reduction required.
std::uint64_t count_points(const CurveQ& e, std::uint32_t p);

}  // namespace bsdlab

#endif
