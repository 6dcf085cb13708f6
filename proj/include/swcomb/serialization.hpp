#ifndef SWCOMB_SERIALIZATION_HPP
#define SWCOMB_SERIALIZATION_HPP

#include "swcomb/explicit_weights.hpp"
#include "swcomb/gl3.hpp"

#include <json.hpp>

#include <string>

/*
 * Wire formats.  One parser, one schema:
 *
 *   inertial type     {"l": L, "pieces": [{"niveau": m, "exponent": e}, ...]}
 *                     pieces in canonical order; round-trips byte-identically
 *   weight            "a1,a2,a3" on the command line, {"entries": [...]} in
 *                     structured output
 *   candidate set     sorted array of type records
 *   report            {"l_range": [lo, hi], "examined": N, "generic": N,
 *                      "skipped": [...], "failures": [...], "pass": bool}
 *
 * Wall time is diagnostic output, not part of the record.
 */

namespace swcomb {

using json = nlohmann::ordered_json;

json type_to_json(const TameInertialType& t);

// Reads a type record and re-canonicalizes it.  The second form supplies the
// prime from context; a record carrying its own "l" must agree.
TameInertialType type_from_json(const json& j);
TameInertialType type_from_json(const json& j, OddPrime l);

json weight_to_json(const LocalWeight& a);
LocalWeight weight_from_json(const json& j);

// "7,3,0" (comma separated, no spaces)
LocalWeight parse_weight(const std::string& csv);
std::string format_weight(const LocalWeight& a);

// "{(1,0),(1,2),(1,3)}"
std::string format_type(const TameInertialType& t);

json candidates_to_json(const CandidateSet& set);

json report_to_json(const gl3::VerificationReport& r);
gl3::VerificationReport report_from_json(const json& j);

} // namespace swcomb

#endif
