#ifndef BSDLAB_ERRORS_HPP
#define BSDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsdlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// No abelian variety over Q has conductor below 10^g (Fontaine); inputs
// violating F * D_K^{2g} > 10^{g d} are inconsistent.
struct FontaineViolation : Error { using Error::Error; };

struct DegenerateInput : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };
struct RankZero : Error { using Error::Error; };
struct NotConfigured : Error { using Error::Error; };

struct SingularCurve : Error { using Error::Error; };
struct BadReduction : Error { using Error::Error; };
struct NonRationalPoint : Error { using Error::Error; };
struct FactorizationIncomplete : Error { using Error::Error; };

struct WrongSign : Error { using Error::Error; };
struct Inconclusive : Error { using Error::Error; };
struct OrderTooHigh : Error { using Error::Error; };
struct MissingLeadingCoefficient : Error { using Error::Error; };

struct InsufficientPoints : Error { using Error::Error; };
struct CutoffInfeasible : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace bsdlab

#endif
