#include "serialize.hpp"

#include <stdexcept>

namespace mot2::cli {

Json to_json(const Field& f) { return f.to_string(); }

Json to_json(const Scalar& s) { return s.to_short_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const FiniteGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generator_perms()) gens.push_back(format_cycles(p));
  return Json{{"name", g.name()}, {"order", g.order()}, {"degree", g.degree()},
              {"generators", gens}, {"definition", format_group_definition(g)}};
}

Json to_json(const Subgroup& h) {
  return Json{{"order", h.order()}, {"index", index(h)}, {"subgroup", h.to_string()}};
}

Json to_json(const CommutativeAlgebra& a) {
  Json triples = Json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      const Vector& p = a.product(i, j);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) triples.push_back(Json::array({i, j, k, to_json(p[k])}));
    }
  return Json{{"field", to_json(a.field())}, {"dimension", a.dimension()}, {"labels", a.labels()},
              {"identity", to_json(a.identity())}, {"structure", triples}};
}

Json to_json(const AlgebraHom& rho) {
  return Json{{"source_labels", rho.source().labels()}, {"target_labels", rho.target().labels()},
              {"matrix", to_json(rho.matrix())}};
}

Json to_json(const MackeyFunctorTable& t) {
  Json values = Json::array();
  for (std::size_t h = 0; h < t.subgroups.size(); ++h)
    values.push_back(Json{{"subgroup", to_json(t.subgroups[h])}, {"dimension", t.dimension(h)}});
  auto maps = [&](const std::map<std::pair<std::size_t, std::size_t>, Matrix>& m, const char* a, const char* b) {
    Json out = Json::array();
    for (const auto& [key, matrix] : m) out.push_back(Json{{a, key.first}, {b, key.second}, {"matrix", to_json(matrix)}});
    return out;
  };
  return Json{{"group", t.group.name()},
              {"field", to_json(t.field)},
              {"source_size", t.source_size},
              {"target_size", t.target_size},
              {"values", values},
              {"restriction", maps(t.restriction, "from", "to")},
              {"transfer", maps(t.transfer, "to", "from")},
              {"conjugation", maps(t.conjugation, "element", "subgroup")}};
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("scalar must be a string");
  const std::string s = j.get<std::string>();
  if (f.is_rational()) return Scalar::parse("Q:" + s);
  return Scalar::parse(f.to_string() + ":" + s);
}

CommutativeAlgebra algebra_from_json(const Json& j) {
  try {
    const Field f = Field::parse(j.at("field").get<std::string>());
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    if (j.at("dimension").get<std::size_t>() != n) throw std::invalid_argument("dimension does not match labels");
    std::vector<std::vector<Vector>> product(n, std::vector<Vector>(n, zero_vector(f, n)));
    for (const auto& t : j.at("structure")) {
      if (!t.is_array() || t.size() != 4) throw std::invalid_argument("structure entries are [i, j, k, c]");
      const auto i = t[0].get<std::size_t>(), k = t[2].get<std::size_t>(), l = t[1].get<std::size_t>();
      if (i >= n || l >= n || k >= n) throw std::invalid_argument("structure index out of range");
      product[i][l][k] = scalar_from_json(f, t[3]);
    }
    Vector identity;
    for (const auto& s : j.at("identity")) identity.push_back(scalar_from_json(f, s));
    return CommutativeAlgebra(f, std::move(labels), std::move(product), std::move(identity));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra: ") + e.what());
  }
}

}  // namespace mot2::cli
