#pragma once

// JSON form of a quiver presentation:
// { "vertices": ["10", ...],
//   "arrows": [["alpha", "10", "05"], ...],
//   "relations": [[{"coeff": 1, "path": ["alpha'", "alpha"]}, ...], ...],
//   "field": "rationals" | {"prime": q} }

#include <json.hpp>

#include "sl3/pathalg/algebra.hpp"

namespace sl3::pathalg {

struct FieldSpec {
  bool rationals = true;
  int prime = 0;
};

inline std::pair<Presentation, FieldSpec> presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  for (const auto& v : j.at("vertices")) p.quiver.vertices.push_back(v.get<std::string>());
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 3)
      throw std::invalid_argument("arrow entries are [name, src, dst]");
    Quiver::Arrow arrow;
    arrow.name = a.at(0).get<std::string>();
    arrow.src = p.quiver.vertex_index(a.at(1).get<std::string>());
    arrow.tgt = p.quiver.vertex_index(a.at(2).get<std::string>());
    p.quiver.arrows.push_back(std::move(arrow));
  }
  for (const auto& rj : j.at("relations")) {
    Relation r;
    for (const auto& tj : rj) {
      Relation::Term t;
      t.coeff = tj.at("coeff").get<long long>();
      for (const auto& aj : tj.at("path"))
        t.arrows.push_back(p.quiver.arrow_index(aj.get<std::string>()));
      r.terms.push_back(std::move(t));
    }
    p.relations.push_back(std::move(r));
  }
  p.validate();
  FieldSpec f;
  if (j.contains("field")) {
    const auto& fj = j.at("field");
    if (fj.is_string() && fj.get<std::string>() == "rationals") {
      f.rationals = true;
    } else if (fj.is_object() && fj.contains("prime")) {
      f.rationals = false;
      f.prime = fj.at("prime").get<int>();
    } else {
      throw std::invalid_argument("field must be \"rationals\" or {\"prime\": q}");
    }
  }
  return {std::move(p), f};
}

inline nlohmann::json presentation_to_json(const Presentation& p, const FieldSpec& f) {
  nlohmann::json j;
  j["vertices"] = p.quiver.vertices;
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : p.quiver.arrows)
    j["arrows"].push_back({a.name, p.quiver.vertices[a.src], p.quiver.vertices[a.tgt]});
  j["relations"] = nlohmann::json::array();
  for (const Relation& r : p.relations) {
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& t : r.terms) {
      nlohmann::json tj;
      tj["coeff"] = t.coeff;
      tj["path"] = nlohmann::json::array();
      for (int a : t.arrows) tj["path"].push_back(p.quiver.arrows[a].name);
      rj.push_back(std::move(tj));
    }
    j["relations"].push_back(std::move(rj));
  }
  if (f.rationals)
    j["field"] = "rationals";
  else
    j["field"] = nlohmann::json{{"prime", f.prime}};
  return j;
}

}  // namespace sl3::pathalg
