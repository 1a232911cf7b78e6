#include <catch2/catch_amalgamated.hpp>

#include "sl3/pathalg/presentation_io.hpp"
#include "sl3/pathalg/workbench.hpp"

using namespace sl3::pathalg;

namespace {

template <class K>
const Algebra<K>& algebra_A() {
  static Algebra<K> a = Algebra<K>::build(presentation_A());
  return a;
}

LayerMultiset layer(std::initializer_list<const char*> labels) {
  LayerMultiset m;
  for (const char* l : labels) ++m[l];
  return m;
}

FiltrationReport report(std::initializer_list<std::initializer_list<const char*>> layers) {
  FiltrationReport r;
  for (auto& l : layers) r.layers.push_back(layer(l));
  return r;
}

}  // namespace

TEST_CASE("rational field") {
  Rational a(2, 4), b(1, 3);
  CHECK(a == Rational(1, 2));
  CHECK((a + b) == Rational(5, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK((a - a).is_zero());
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("prime field") {
  GF<3> x(2), y(2);
  CHECK((x * y) == GF<3>(1));
  CHECK((x + y) == GF<3>(1));
  CHECK((x / y) == GF<3>(1));
  CHECK(GF<3>(-1) == GF<3>(2));
  CHECK(x.inverse() == GF<3>(2));
}

TEST_CASE("linear algebra") {
  Mat<Rational> m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  CHECK(rank(m) == 1);
  Mat<Rational> ker = null_space(m);
  CHECK(ker.rows() == 2);
  for (int i = 0; i < ker.rows(); ++i) {
    auto v = ker.row(i);
    for (int j = 0; j < 2; ++j) {
      Rational s;
      for (int c = 0; c < 3; ++c) s += m.at(j, c) * v[c];
      CHECK(s.is_zero());
    }
  }
  Subspace<Rational> s(3);
  CHECK(s.insert({Rational(1), Rational(1), Rational(0)}));
  CHECK(s.insert({Rational(0), Rational(1), Rational(1)}));
  CHECK_FALSE(s.insert({Rational(1), Rational(2), Rational(1)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({Rational(1), Rational(0), Rational(-1)}));
}

TEST_CASE("algebra A basis and strata") {
  const auto& a = algebra_A<Rational>();
  CHECK(a.dim() == 34);
  CHECK(a.nilpotency_degree() == 7);
  CHECK(a.stratum_sizes() == std::vector<int>{4, 6, 7, 6, 6, 4, 1});
  for (const Relation& r : a.presentation().relations) CHECK(a.evaluate(r).empty());
}

TEST_CASE("algebra B and the trivial algebra") {
  Algebra<Rational> b = Algebra<Rational>::build(presentation_B());
  CHECK(b.dim() == 9);
  CHECK(b.nilpotency_degree() == 3);
  CHECK(b.stratum_sizes() == std::vector<int>{3, 4, 2});
  CHECK(projective(b, b.quiver().vertex_index("10")).rep.total_dim() == 5);
  CHECK(projective(b, b.quiver().vertex_index("05")).rep.total_dim() == 2);
  CHECK(projective(b, b.quiver().vertex_index("51")).rep.total_dim() == 2);

  Presentation trivial;
  trivial.quiver.vertices = {"pt"};
  CHECK(Algebra<Rational>::build(trivial).dim() == 1);

  Presentation loop;  // infinite-dimensional: one vertex, one loop
  loop.quiver.vertices = {"pt"};
  loop.quiver.arrows = {{"x", 0, 0}};
  CHECK_THROWS_AS(Algebra<Rational>::build(loop, 8), NonTerminating);
}

TEST_CASE("projective dimensions and layers") {
  const auto& a = algebra_A<Rational>();
  auto p10 = projective(a, a.quiver().vertex_index("10"));
  auto p05 = projective(a, a.quiver().vertex_index("05"));
  auto p51 = projective(a, a.quiver().vertex_index("51"));
  auto p43 = projective(a, a.quiver().vertex_index("43"));
  CHECK(p10.rep.total_dim() == 15);
  CHECK(p05.rep.total_dim() == 7);
  CHECK(p51.rep.total_dim() == 7);
  CHECK(p43.rep.total_dim() == 5);
  for (auto* p : {&p10, &p05, &p51, &p43}) CHECK(p->rep.relations_hold());

  CHECK(radical_filtration(p43.rep) == report({{"43"}, {"10"}, {"05", "51"}, {"10"}}));
  // the socle of P(10) has length 2
  auto soc = socle_filtration(p10.rep);
  int soc_len = 0;
  for (auto& [v, m] : soc.layers.front()) soc_len += m;
  CHECK(soc_len == 2);
}

TEST_CASE("quotients") {
  const auto& a = algebra_A<Rational>();
  const int v10 = a.quiver().vertex_index("10");
  auto p10 = projective(a, v10);

  Rep<Rational> t43 = t43_quotient_model(a);
  CHECK(t43.total_dim() == 10);
  CHECK(t43.relations_hold());

  // P(10)/(alpha A + beta A + gamma A) is the simple at 10
  std::vector<Element<Rational>> gens;
  for (const char* arrow : {"alpha", "beta", "gamma"}) {
    Path p;
    p.src = v10;
    p.arrows = {a.quiver().arrow_index(arrow)};
    p.tgt = a.quiver().arrows[p.arrows[0]].tgt;
    gens.push_back(p10.unit(*a.basis_index(p)));
  }
  Rep<Rational> t10 = quotient_by_elements(p10.rep, gens);
  CHECK(t10.total_dim() == 1);
  CHECK(t10.dims[v10] == 1);

  Rep<Rational> same = quotient_by_elements(p10.rep, {});
  CHECK(same.total_dim() == 15);
  CHECK(rep_isomorphic(same, p10.rep));
}

TEST_CASE("T(43) structure") {
  const auto& a = algebra_A<Rational>();
  Rep<Rational> t43 = t43_quotient_model(a);

  CHECK(radical_filtration(t43) ==
        report({{"10"}, {"05", "51"}, {"10", "10"}, {"43"}, {"10"}, {"05", "51"}, {"10"}}));
  CHECK(socle_filtration(t43) ==
        report({{"10"}, {"05", "51"}, {"10", "10"}, {"43"}, {"10"}, {"05", "51"}, {"10"}}));
  CHECK(loewy_length(t43) == 7);
  CHECK_FALSE(is_rigid(t43));
  CHECK(composition_multiset(t43) ==
        LayerMultiset{{"10", 5}, {"05", 2}, {"51", 2}, {"43", 1}});

  // top and socle are the simple at 10; the radical layer above 43 and the
  // socle layer below 43 each hold two copies of 10
  auto rad = radical_filtration(t43);
  auto soc = socle_filtration(t43);
  CHECK(rad.layers.front() == layer({"10"}));
  CHECK(soc.layers.front() == layer({"10"}));
  CHECK(rad.layers[3] == layer({"43"}));
  CHECK(rad.layers[2] == layer({"10", "10"}));
  CHECK(soc.layers[3] == layer({"43"}));
  CHECK(soc.layers[2] == layer({"10", "10"}));

  CHECK(rep_isomorphic(t43, contravariant_dual(t43)));
}

TEST_CASE("rigidity verdicts") {
  const auto& a = algebra_A<Rational>();
  auto order = appendix_order(a.quiver());
  Rep<Rational> d43 = delta_module(a, order, a.quiver().vertex_index("43"));
  CHECK(d43.total_dim() == 5);
  CHECK(is_rigid(d43));
  CHECK(rep_isomorphic(d43, projective(a, a.quiver().vertex_index("43")).rep));

  Rep<Rational> d10 = delta_module(a, order, a.quiver().vertex_index("10"));
  CHECK(d10.total_dim() == 1);
  CHECK(is_rigid(d10));
}

TEST_CASE("standard modules") {
  const auto& a = algebra_A<Rational>();
  auto order = appendix_order(a.quiver());
  Rep<Rational> d05 = delta_module(a, order, a.quiver().vertex_index("05"));
  CHECK(d05.total_dim() == 2);
  CHECK(radical_filtration(d05) == report({{"05"}, {"10"}}));
  Rep<Rational> d51 = delta_module(a, order, a.quiver().vertex_index("51"));
  CHECK_FALSE(rep_isomorphic(d05, d51));
  CHECK(rep_isomorphic(d05, d05));
  Rep<Rational> n05 = nabla_module(a, order, a.quiver().vertex_index("05"));
  CHECK(radical_filtration(n05) == report({{"10"}, {"05"}}));
}

TEST_CASE("rad Delta(43) is isomorphic to nabla(43)/soc") {
  const auto& a = algebra_A<Rational>();
  auto order = appendix_order(a.quiver());
  const int v43 = a.quiver().vertex_index("43");

  Rep<Rational> d43 = delta_module(a, order, v43);
  Rep<Rational> n43 = nabla_module(a, order, v43);
  Rep<Rational> n43_mod = quotient(n43, socle_series(n43)[1]).rep;

  // rad M = dual(dual(M)/soc dual(M))
  Rep<Rational> dual_d43 = contravariant_dual(d43);
  Rep<Rational> rad_d43 =
      contravariant_dual(quotient(dual_d43, socle_series(dual_d43)[1]).rep);

  CHECK(rad_d43.total_dim() == 4);
  CHECK(n43_mod.total_dim() == 4);
  CHECK(rep_isomorphic(rad_d43, n43_mod));

  // a homogeneous length-4 module: top 10, socle 10, middle 05+51
  CHECK(radical_filtration(rad_d43) == report({{"10"}, {"05", "51"}, {"10"}}));
  CHECK(socle_filtration(rad_d43) == report({{"10"}, {"05", "51"}, {"10"}}));
}

TEST_CASE("contravariant duality") {
  const auto& a = algebra_A<Rational>();
  auto order = appendix_order(a.quiver());
  Rep<Rational> d05 = delta_module(a, order, a.quiver().vertex_index("05"));
  Rep<Rational> n05 = nabla_module(a, order, a.quiver().vertex_index("05"));
  CHECK(rep_isomorphic(contravariant_dual(d05), n05));
  CHECK(rep_isomorphic(contravariant_dual(contravariant_dual(d05)), d05));

  // an asymmetric presentation is rejected
  Presentation bad = presentation_B();
  bad.relations.erase(bad.relations.begin() + 1);  // drop a'b = 0, keep b'a = 0
  Algebra<Rational> asym = Algebra<Rational>::build(bad);
  auto p = projective(asym, 0);
  CHECK_THROWS_AS(contravariant_dual(p.rep), PresentationNotSelfDual);
}

TEST_CASE("tilting constructor") {
  const auto& a = algebra_A<Rational>();
  auto order = appendix_order(a.quiver());
  const int v43 = a.quiver().vertex_index("43");

  auto t = build_tilting(a, order, v43);
  CHECK(t.rep.total_dim() == 10);
  CHECK(t.delta_factors ==
        std::map<int, int>{{a.quiver().vertex_index("10"), 1},
                           {a.quiver().vertex_index("05"), 1},
                           {a.quiver().vertex_index("51"), 1},
                           {v43, 1}});
  CHECK(rep_isomorphic(t.rep, t43_quotient_model(a)));
  CHECK(rep_isomorphic(t.rep, contravariant_dual(t.rep)));

  auto t10 = build_tilting(a, order, a.quiver().vertex_index("10"));
  CHECK(t10.rep.total_dim() == 1);

  // order-insensitivity: swap the two incomparable middle vertices
  std::vector<int> order2 = {order[0], order[2], order[1], order[3]};
  auto t2 = build_tilting(a, order2, v43);
  CHECK(rep_isomorphic(t.rep, t2.rep));
}

TEST_CASE("the variant algebra") {
  Algebra<Rational> ap = Algebra<Rational>::build(presentation_Aprime());
  auto order = appendix_order(ap.quiver());
  const int v43 = ap.quiver().vertex_index("43");
  auto t = build_tilting(ap, order, v43);
  CHECK(t.rep.total_dim() == 11);
  CHECK(t.delta_factors ==
        std::map<int, int>{{ap.quiver().vertex_index("10"), 2},
                           {ap.quiver().vertex_index("05"), 1},
                           {ap.quiver().vertex_index("51"), 1},
                           {v43, 1}});
  CHECK(rep_isomorphic(t.rep, contravariant_dual(t.rep)));

  // dim A' is computed, not quoted; it must agree over Q and F3
  Algebra<GF<3>> ap3 = Algebra<GF<3>>::build(presentation_Aprime());
  CHECK(ap3.dim() == ap.dim());
}

TEST_CASE("four-subspace configuration of T(43)") {
  const auto& a = algebra_A<Rational>();
  auto r = four_subspace_report(t43_quotient_model(a));
  CHECK(r.dim_v == 3);
  CHECK(r.dim_u1 == 2);
  CHECK(r.dim_u2 == 2);
  CHECK(r.dim_u3 == 1);
  CHECK(r.dim_u4 == 1);
  CHECK(r.dim_u1_cap_u2 == 1);
  CHECK(r.dim_u3_plus_u4 == 2);
  CHECK(r.u1_cap_u2_is_im_gamma);
  CHECK(r.u3_plus_u4_is_ker_gamma);
  CHECK(r.im_gamma_inside_ker_gamma);
  CHECK(r.all_distinct);
}

TEST_CASE("coefficient quiver DOT export") {
  const auto& a = algebra_A<Rational>();
  std::string dot = coefficient_quiver_dot(t43_quotient_model(a), "T43");
  CHECK(dot_node_count(dot) == 10);
  CHECK(dot_edge_count(dot) == 12);  // includes the curved beta-edge
  CHECK(dot.find("digraph") != std::string::npos);

  std::string p43dot =
      coefficient_quiver_dot(projective(a, a.quiver().vertex_index("43")).rep, "P43");
  CHECK(dot_node_count(p43dot) == 5);
  CHECK(dot_edge_count(p43dot) == 5);

  auto order = appendix_order(a.quiver());
  std::string simple =
      coefficient_quiver_dot(delta_module(a, order, a.quiver().vertex_index("10")), "T10");
  CHECK(dot_node_count(simple) == 1);
  CHECK(dot_edge_count(simple) == 0);
}

TEST_CASE("identical structure over the rationals and F3") {
  Algebra<GF<3>> a3 = Algebra<GF<3>>::build(presentation_A());
  CHECK(a3.dim() == 34);
  CHECK(a3.nilpotency_degree() == 7);
  CHECK(a3.stratum_sizes() == std::vector<int>{4, 6, 7, 6, 6, 4, 1});

  Rep<GF<3>> t43 = t43_quotient_model(a3);
  CHECK(t43.total_dim() == 10);
  CHECK_FALSE(is_rigid(t43));
  CHECK(loewy_length(t43) == 7);
  const auto& aq = algebra_A<Rational>();
  CHECK(radical_filtration(t43) == radical_filtration(t43_quotient_model(aq)));
  CHECK(socle_filtration(t43) == socle_filtration(t43_quotient_model(aq)));

  auto order = appendix_order(a3.quiver());
  auto t = build_tilting(a3, order, a3.quiver().vertex_index("43"));
  CHECK(t.rep.total_dim() == 10);
  CHECK(rep_isomorphic(t.rep, t43));

  auto r = four_subspace_report(t43);
  CHECK(r.dim_v == 3);
  CHECK(r.dim_u1 == 2);
  CHECK(r.dim_u3 == 1);
  CHECK(r.all_distinct);
}

TEST_CASE("presentation json round trip") {
  FieldSpec f;
  nlohmann::json j = presentation_to_json(presentation_A(), f);
  auto [pres, field] = presentation_from_json(j);
  CHECK(field.rationals);
  Algebra<Rational> a = Algebra<Rational>::build(pres);
  CHECK(a.dim() == 34);

  nlohmann::json bad = j;
  bad["arrows"][0] = nlohmann::json::array({"x"});
  CHECK_THROWS_AS(presentation_from_json(bad), std::invalid_argument);

  nlohmann::json f3 = j;
  f3["field"] = {{"prime", 3}};
  auto [pres3, field3] = presentation_from_json(f3);
  CHECK_FALSE(field3.rationals);
  CHECK(field3.prime == 3);
}
