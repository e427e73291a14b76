#include "wellcovered/json_io.hpp"

namespace wc {

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

Json to_json(const MisList& mis) { return to_json(mis.sets); }

Json to_json(const FieldScalar& x) {
  if (x.is_rational()) return x.to_string();
  return x.residue();
}

Json to_json(const std::vector<FieldScalar>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const SimplicialReport& r) {
  return Json{{"simplicial_vertices", to_json(r.simplicial_vertices)},
              {"cliques", to_json(r.cliques)},
              {"sc", r.sc},
              {"connection_set", to_json(r.connection_set)},
              {"per_clique_w", to_json(r.per_clique_w)}};
}

Json to_json(const SccgCountBreakdown& b) {
  return Json{{"i_count", b.i_count}, {"product_term", b.product_term}, {"sum_term", b.sum_term}, {"total", b.total}};
}

Json wcspace_report(const std::string& graph_name, const WcSpace& space) {
  Json basis = Json::array();
  for (const auto& w : space.basis) basis.push_back(to_json(w.values));
  return Json{{"graph", graph_name},
              {"field", space.field.name()},
              {"mis_count", space.mis_count},
              {"dimension", space.dimension},
              {"basis", std::move(basis)},
              {"constraint_rank", space.constraint_rank}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wc
