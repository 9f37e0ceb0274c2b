#pragma once

#include <json.hpp>

#include "specbound/expansion.hpp"
#include "specbound/search.hpp"

namespace specbound {

using json = nlohmann::ordered_json;

/// JSON encodings of library results. Field layout is documented in
/// docs/report.schema.json; partitions are 0-based label arrays plus a
/// "groups" string rendered 1-based.
json to_json(const Matrix& m);
json to_json(const RhoEstimate<double>& e);
json to_json(const Trail& t);
json to_json(const SearchOptions& o);
json to_json(const BoundsReport& r, const Matrix& input);
json to_json(const ComparisonCertificate& c);

/// Reads back a trail written by to_json(Trail) so certificates can be
/// replayed by a separate process.
Trail trail_from_json(const json& j);

/// Expansion plan documents; see docs/plan.schema.json. A document is either
/// one plan ({"sizes": ..., "orientations"|"orientation": ..., "fill": ...})
/// or {"steps": [...]}. A non-null seed_override replaces the seed of every
/// seeded-random fill.
std::vector<ExpansionStep> parse_plan(const json& doc, std::optional<std::uint64_t> seed_override = {});
FillPolicy parse_fill(const json& j, std::optional<std::uint64_t> seed_override = {});

}  // namespace specbound
