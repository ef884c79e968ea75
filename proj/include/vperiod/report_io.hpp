#pragma once

#include <json.hpp>

#include <string>

#include "vperiod/bounds.hpp"
#include "vperiod/cyclotomic.hpp"
#include "vperiod/periodicity.hpp"
#include "vperiod/recurrence.hpp"
#include "vperiod/subfields.hpp"

namespace vperiod {

// Insertion-ordered JSON keeps report payloads byte-stable across runs.
using Json = nlohmann::ordered_json;

Json cycnum_to_json(const CycNum& a);
CycNum cycnum_from_json(const Json& j);

Json subfield_to_json(const SubfieldDesc& d);
Json bound_to_json(const BoundReport& b);
Json period_to_json(const PeriodReport& p);
Json zeroset_to_json(const ZeroSetDecomposition& z);

// Versioned Lrs file format:
//   {"version":1, "m":..., "coeffs":[CycNum...], "initial":[CycNum...]}
Json lrs_to_json(const Lrs& L);
Lrs lrs_from_json(const Json& j);
Lrs lrs_from_file(const std::string& path);

// Flatten a payload into "key,value" lines (arrays as key.0, key.1, ...)
// carrying exactly the same scalar content as the JSON form.
std::string json_to_csv(const Json& payload);

}  // namespace vperiod
