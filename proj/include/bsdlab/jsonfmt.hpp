#ifndef BSDLAB_JSONFMT_HPP
#define BSDLAB_JSONFMT_HPP

#include <string>

#include <json.hpp>

#include "bsdlab/bounds.hpp"
#include "bsdlab/bsdcheck.hpp"
#include "bsdlab/lseries.hpp"
#include "bsdlab/mwsearch.hpp"

namespace bsdlab {

using Json = nlohmann::ordered_json;

// Deterministic rendering: floats go out as scientific-notation strings with
// 12 significant digits, so identical runs emit identical bytes.
std::string fmt_real(double x);

Json json_of(const VarietyInvariants& v);
Json json_of(const ConstantsConfig& c);
Json json_of(const LogMagnitude& m);
Json json_of(const BoundReport& r);
Json json_of(const LeadingCoefficient& lc);
Json json_of(const BsdTerms& t);
Json json_of(const VerificationReport& r);
Json json_of(const MWBasis& b);
Json json_of(const SearchCertificate& c);

std::string dump(const Json& j);

// flat-object parsing for the documented wire formats; numbers may arrive as
// JSON numbers or as the scientific-notation strings this library emits
VarietyInvariants invariants_from_json(const Json& j);
ConstantsConfig constants_from_json(const Json& j);

}  // namespace bsdlab

#endif
