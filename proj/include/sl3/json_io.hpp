#pragma once

// JSON wire formats: decomposition results, the derived tilting-character
// cache file, and quiver presentations.

#include <fstream>

#include <json.hpp>

#include "sl3/decompose.hpp"

namespace sl3 {

using nlohmann::json;

inline json to_json(Weight w) { return json::array({w.a, w.b}); }

inline Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("expected a weight as [a,b]");
  return {j[0].get<int>(), j[1].get<int>()};
}

inline json to_json(const Decomposition& d, bool verified) {
  json summands = json::array();
  for (const Summand& s : d.summands) {
    json factors = json::array();
    for (const Factor& f : s.factors) {
      json fj;
      switch (f.atom.kind) {
        case AtomKind::Tilting: fj["kind"] = "T"; fj["wt"] = to_json(f.atom.wt); break;
        case AtomKind::Simple: fj["kind"] = "L"; fj["wt"] = to_json(f.atom.wt); break;
        case AtomKind::M: fj["kind"] = "M"; break;
      }
      fj["twist"] = f.twist;
      factors.push_back(std::move(fj));
    }
    summands.push_back(json{{"mult", s.mult}, {"factors", std::move(factors)}});
  }
  return json{{"p", d.p},
              {"lambda", to_json(d.lambda)},
              {"mu", to_json(d.mu)},
              {"summands", std::move(summands)},
              {"indecomposable_flags", d.indecomposable},
              {"verified", verified},
              {"errata", d.errata}};
}

inline Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.p = j.at("p").get<int>();
  d.lambda = weight_from_json(j.at("lambda"));
  d.mu = weight_from_json(j.at("mu"));
  for (const json& sj : j.at("summands")) {
    Summand s;
    s.mult = sj.at("mult").get<long long>();
    for (const json& fj : sj.at("factors")) {
      Factor f;
      std::string kind = fj.at("kind").get<std::string>();
      if (kind == "T") f.atom = Atom::T(weight_from_json(fj.at("wt")));
      else if (kind == "L") f.atom = Atom::L(weight_from_json(fj.at("wt")));
      else if (kind == "M") f.atom = Atom::M();
      else throw std::invalid_argument("bad factor kind " + kind);
      f.twist = fj.at("twist").get<int>();
      s.factors.push_back(f);
    }
    d.summands.push_back(std::move(s));
  }
  d.indecomposable = j.at("indecomposable_flags").get<std::vector<bool>>();
  d.errata = j.at("errata").get<std::vector<std::string>>();
  return d;
}

// -------------------------------------------------------------------------
// Derived tilting-character cache.  A file is a JSON array of records
// { "p": int, "weight": [a,b], "weyl_multiplicities": [[[a,b], m], ...],
//   "provenance": "paper-table" | "donkin-digits" | "derived-by-convention" }.

inline json to_json(const TiltingStore::Record& r) {
  json mults = json::array();
  for (auto& [w, m] : r.expr) mults.push_back(json::array({to_json(w), m}));
  return json{{"p", r.p},
              {"weight", to_json(r.weight)},
              {"weyl_multiplicities", std::move(mults)},
              {"provenance", to_string(r.prov)}};
}

inline TiltingStore::Record tilting_record_from_json(const json& j) {
  TiltingStore::Record r;
  r.p = j.at("p").get<int>();
  r.weight = weight_from_json(j.at("weight"));
  for (const json& t : j.at("weyl_multiplicities"))
    r.expr[weight_from_json(t.at(0))] = t.at(1).get<long long>();
  std::string prov = j.at("provenance").get<std::string>();
  if (prov == "paper-table") r.prov = Provenance::PaperTable;
  else if (prov == "donkin-digits") r.prov = Provenance::DonkinDigits;
  else if (prov == "derived-by-convention") r.prov = Provenance::DerivedByConvention;
  else throw std::invalid_argument("bad provenance " + prov);
  return r;
}

inline void save_tilting_cache(const std::string& path) {
  json arr = json::array();
  for (const auto& r : TiltingStore::instance().derived_records())
    arr.push_back(to_json(r));
  std::ofstream out(path);
  out << arr.dump(1) << "\n";
}

inline void load_tilting_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) return;
  json arr = json::parse(in, nullptr, true);
  for (const json& j : arr)
    TiltingStore::instance().import_record(tilting_record_from_json(j));
}

}  // namespace sl3
