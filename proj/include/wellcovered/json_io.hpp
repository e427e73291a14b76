#pragma once

#include <string>

#include "json.hpp"
#include "wellcovered/field.hpp"
#include "wellcovered/graph.hpp"
#include "wellcovered/mis.hpp"
#include "wellcovered/wc_space.hpp"

namespace wc {

using Json = nlohmann::json;

Json to_json(const VertexSet& s);
Json to_json(const std::vector<VertexSet>& sets);
Json to_json(const MisList& mis);
/// Rationals as "num/den" strings (plain integer strings when den = 1);
/// residues as integers.
Json to_json(const FieldScalar& x);
Json to_json(const std::vector<FieldScalar>& v);
Json to_json(const SimplicialReport& r);
Json to_json(const SccgCountBreakdown& b);
/// {graph, field, mis_count, dimension, basis, constraint_rank}
Json wcspace_report(const std::string& graph_name, const WcSpace& space);

/// Serialized with sorted keys and two-space indentation, newline-terminated.
std::string dump(const Json& j);

}  // namespace wc
