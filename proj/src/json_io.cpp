#include "tenscanon/json_io.hpp"

#include "tenscanon/print.hpp"

namespace tenscanon {

Json polynomial_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const Monomial& m : p.monomials()) {
    Json factors = Json::array();
    for (const ElementarySymbol& f : m.factors()) factors.push_back(print(f));
    terms.push_back(Json{{"coeff", m.coeff().str()}, {"factors", std::move(factors)}});
  }
  return terms;
}

Json stats_json(const CanonStats& stats, std::optional<std::int64_t> millis) {
  Json out{{"orbit", stats.orbit}, {"stabilizer", stats.stabilizer}};
  if (millis) out["millis"] = *millis;
  return out;
}

Json canon_report(const Polynomial& input, const Polynomial& canonical, const CanonStats& stats,
                  std::optional<std::int64_t> millis) {
  return Json{{"input", print(input)},
              {"canonical", polynomial_json(canonical)},
              {"stats", stats_json(stats, millis)}};
}

Json basis_report(const SignatureSpace& space) {
  const auto& type = space.signature.type();
  Json basis = Json::array();
  for (int id : space.pattern->basis) basis.push_back(print(space.symbol(id)));
  Json rewrites = Json::object();
  for (int id = 0; id < space.symbol_count(); ++id) {
    if (space.is_canonical(id)) continue;
    Json combo = Json::array();
    for (const auto& [basis_id, coeff] : space.rewrite(id))
      combo.push_back(Json{{"coeff", coeff.str()}, {"symbol", print(space.symbol(basis_id))}});
    rewrites[print(space.symbol(id))] = std::move(combo);
  }
  return Json{{"type", type->name()},
              {"arity", type->arity()},
              {"signature", print(ElementarySymbol(type, space.signature.indices()))},
              {"symbols", space.symbol_count()},
              {"relation_rank", space.pattern->rank},
              {"basis", std::move(basis)},
              {"rewrites", std::move(rewrites)}};
}

Json graph_report(const MonomialGraph& graph, const GraphCertificate& cert) {
  Json vertices = Json::array();
  for (const auto& v : graph.vertices)
    vertices.push_back(Json{{"factor", v.factor}, {"color", v.color}});
  Json edges = Json::array();
  for (const auto& e : graph.edges)
    edges.push_back(Json{{"v1", e.v1},
                         {"class1", e.c1},
                         {"v2", e.v2},
                         {"class2", e.c2},
                         {"dummy", e.dummy}});
  Json seeds = Json::array();
  for (const auto& s : cert.seed_renamings) {
    Json img = Json::array();
    for (int i = 1; i <= s.size(); ++i) img.push_back(s.map(i));
    seeds.push_back(std::move(img));
  }
  return Json{{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"dummies", graph.dummy_count},
              {"certificate", cert.certificate},
              {"seed_renamings", std::move(seeds)}};
}

}  // namespace tenscanon
