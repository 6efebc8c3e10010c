#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "valdim/dimension.hpp"
#include "valdim/filters.hpp"
#include "valdim/pp.hpp"
#include "valdim/ziegler.hpp"

namespace valdim {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json filter_json(const IdealFilter& f);
// Inverse of filter_json; throws InvalidArgument on malformed input.
IdealFilter filter_from_json(const Json& j);
Json ordinal_json(const std::optional<Ordinal>& a);  // "undefined" when empty

// Result payloads, one per command.
Json dimension_payload(const LGroup& g, const DimensionResult& r);
Json chain_payload(const LGroup& g, CollapseClass c, const CollapseChain& chain);
Json cbrank_space_payload(const Ordinal& top, std::size_t budget);
Json zg_payload(const LGroup& g, int bound, bool stratify);
Json leq_payload(const PpFormula& lhs, const PpFormula& rhs);
Json classify_payload(const ClassifyReport& r);
Json spec_star_payload(const LGroup& g, const SpecStarReport& r, const std::optional<Ordinal>& mdim);

// {schema_version, command, gamma, engine, result, timing}; gamma is omitted when empty.
Json make_report(const std::string& command, const std::string& gamma, const std::string& method, Json result,
                 double seconds);

// Aligned text rendering of a report; depends only on the JSON.
std::string render_table(const Json& report);

}  // namespace valdim
