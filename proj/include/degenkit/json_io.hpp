#pragma once

#include <string>

#include <json.hpp>

#include "degenkit/algebra.hpp"
#include "degenkit/catalog.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/invariants.hpp"
#include "degenkit/pierce.hpp"

namespace degenkit {

using Json = nlohmann::json;

/// Symmetry is detected from the table; products are listed accordingly.
Json algebra_to_json(const Algebra& a);
/// Throws Parse, IndexOutOfRange, SymmetryConflict.
Algebra algebra_from_json(const Json& j);

/// post_iso is written as a list of rows.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Json profile_to_json(const InvariantProfile& p);
Json verdict_to_json(const WitnessVerdict& v);
Json pierce_to_json(const PierceSplit& s);
Json obstructions_to_json(const std::vector<Obstruction>& obs);
Json variety_report_to_json(const VarietyReport& r);

/// Throws Io or Parse.
Json read_json_file(const std::string& path);
/// Pretty-printed with sorted keys and a trailing newline. Throws Io.
void write_json_file(const std::string& path, const Json& j);

}  // namespace degenkit
