#pragma once

// JSON views of the library types. Potentially large integers (series
// coefficients, cusp orders, character data, counts) are rendered as
// decimal strings so downstream consumers never overflow.

#include <json.hpp>

#include "qseries/density.hpp"
#include "qseries/hecke.hpp"
#include "qseries/modform.hpp"
#include "qseries/partitions.hpp"

namespace qseries {

using json = nlohmann::json;

json series_to_json(const SeriesZ& s);
json series_to_json(const SeriesMod& s);
SeriesZ seriesz_from_json(const json& j);

json eta_to_json(const EtaQuotient& E);
// Accepts {"terms": {"24": -2, "48": "1", ...}, "level": 576}; exponents
// may be JSON numbers or decimal strings; "level" is optional.
EtaQuotient eta_from_json(const json& j);

json certificate_to_json(const Certificate& c);
json hook_diagram_to_json(const HookDiagram& d);
json density_to_json(const DensityReport& r);
json scan_to_json(const std::vector<CongruenceCandidate>& cs);
json nilpotency_to_json(const NilpotencyReport& r);
json cong1_to_json(const Cong1Report& r);
json congruence_check_to_json(const CongruenceCheck& c);
json lcases_to_json(const LCaseReport& r);

// Fixed-point decimal rendering of an exact rational, round-toward-zero.
std::string decimal_string(const mpq_class& q, int digits);

} // namespace qseries
