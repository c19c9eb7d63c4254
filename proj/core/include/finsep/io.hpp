#pragma once

// JSON and CSV forms of the library's values and reports.

#include <nlohmann/json.hpp>
#include <string>

#include "finsep/ak.hpp"
#include "finsep/galois.hpp"
#include "finsep/gf.hpp"
#include "finsep/grouplab.hpp"
#include "finsep/lrs.hpp"
#include "finsep/polyring.hpp"

namespace finsep {

using json = nlohmann::ordered_json;

json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

/// Integer when r = 1, ascending digit list otherwise. Parsing accepts both.
json fq_to_json(const Field& field, fq_t a);
fq_t fq_from_json(const Field& field, const json& j);

json to_json(const Poly& a);
Poly poly_from_json(const FieldPtr& field, const json& j);

/// {"num": Poly, "den": Poly}
json to_json(const RationalFn& a);
/// Also accepts a bare Poly or a string in parse_rational syntax.
RationalFn rational_from_json(const FieldPtr& field, const json& j);

json to_json(const PolyOverK& f);

/// {"order", "coeffs", "initial", "start"}; "field" is optional on input and
/// must match when present.
json to_json(const LrsSpec& spec);
LrsSpec lrs_from_json(const FieldPtr& field, const json& j);

json to_json(const AkElement& x);
/// degree,P,value (value "bad" at bad primes)
std::string to_csv(const AkElement& x);

json to_json(const Rational& r);
json to_json(const Ratio& r);
json to_json(const DensityReport& report);
/// degree,hits,total,cumulative_fraction
std::string to_csv(const DensityReport& report);
json to_json(const RootDensityReport& report);
json to_json(const WreathBoundReport& report);

}  // namespace finsep
