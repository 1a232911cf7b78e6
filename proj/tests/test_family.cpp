#include <catch2/catch_amalgamated.hpp>

#include "sl3/family.hpp"

using namespace sl3;

namespace {

Character multiset_character(int p, const AtomMultiset& m) {
  Character out;
  for (auto& [mult, atom] : m) out += mult * family_character(p, atom);
  return out;
}

std::vector<Weight> restricted_weights(int p) {
  std::vector<Weight> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("restricted table examples") {
  CHECK(restricted_decompose(2, {1, 0}, {0, 1}) ==
        AtomMultiset{{1, Atom::T({0, 0})}, {1, Atom::T({1, 1})}});
  CHECK(restricted_decompose(3, {2, 1}, {1, 2}) ==
        AtomMultiset{{1, Atom::T({1, 1})}, {2, Atom::T({2, 2})}, {1, Atom::T({3, 3})}});
  CHECK(restricted_decompose(3, {0, 1}, {2, 0}) ==
        AtomMultiset{{1, Atom::T({1, 0})}, {1, Atom::T({2, 1})}});
  CHECK(restricted_decompose(3, {1, 1}, {1, 1}) ==
        AtomMultiset{{1, Atom::T({0, 0})}, {1, Atom::T({2, 2})}, {1, Atom::M()}});
  CHECK(restricted_decompose(3, {0, 0}, {1, 1}) == AtomMultiset{{1, Atom::L({1, 1})}});
  CHECK(restricted_decompose(3, {0, 0}, {2, 1}) == AtomMultiset{{1, Atom::T({2, 1})}});
  CHECK(restricted_decompose(2, {0, 0}, {0, 0}) == AtomMultiset{{1, Atom::T({0, 0})}});
  CHECK_THROWS_AS(restricted_decompose(3, {3, 0}, {1, 1}), NotRestricted);
  CHECK_THROWS_AS(restricted_decompose(2, {2, 0}, {1, 1}), NotRestricted);
}

TEST_CASE("table symmetry closure") {
  for (int p : {2, 3})
    for (Weight x : restricted_weights(p))
      for (Weight y : restricted_weights(p)) {
        auto direct = restricted_decompose(p, x, y);
        auto flipped_out = flipped(restricted_decompose(p, x.flipped(), y.flipped()));
        std::sort(direct.begin(), direct.end(),
                  [](auto& l, auto& r) { return l.second < r.second; });
        std::sort(flipped_out.begin(), flipped_out.end(),
                  [](auto& l, auto& r) { return l.second < r.second; });
        REQUIRE(direct == flipped_out);
      }
}

TEST_CASE("character conservation on every table line") {
  for (int p : {2, 3})
    for (Weight x : restricted_weights(p))
      for (Weight y : restricted_weights(p))
        REQUIRE(multiset_character(p, restricted_decompose(p, x, y)) ==
                simple_character(p, x) * simple_character(p, y));
}

TEST_CASE("identity lists match recomputation from first principles") {
  for (int p : {2, 3})
    for (const IdentityLine& line : chi_identity_lines(p)) {
      Character prod = simple_character(p, line.x) * simple_character(p, line.y);
      REQUIRE(into_simple_basis(p, prod) == line.expansion);
    }
}

TEST_CASE("composition length conservation per table line") {
  for (const IdentityLine& line : chi_identity_lines(3)) {
    long long identity_total = 0;
    for (auto& [w, c] : line.expansion) identity_total += c;
    long long table_total = 0;
    for (auto& [mult, atom] : restricted_decompose(3, line.x, line.y)) {
      long long len = 0;
      for (auto& [w, c] : into_simple_basis(3, family_character(3, atom))) len += c;
      table_total += mult * len;
    }
    REQUIRE(table_total == identity_total);
  }
}

TEST_CASE("atom metadata") {
  auto m = atom_metadata(3, Atom::T({5, 2}));
  CHECK(m.is_tilting);
  CHECK_FALSE(m.simple_restricted_socle);
  CHECK(m.in_family);
  CHECK_FALSE(m.in_fprime);

  m = atom_metadata(3, Atom::M());
  CHECK_FALSE(m.is_tilting);
  CHECK(m.in_family);
  CHECK(m.simple_restricted_socle);

  m = atom_metadata(2, Atom::T({2, 2}));
  CHECK(m.simple_restricted_socle);

  m = atom_metadata(3, Atom::T({6, 0}));
  CHECK(m.simple_restricted_socle);
  CHECK_FALSE(m.in_family);
  CHECK(m.in_fprime);

  CHECK_THROWS_AS(atom_metadata(3, Atom::T({6, 1})), std::invalid_argument);
  CHECK_THROWS_AS(atom_metadata(2, Atom::M()), std::invalid_argument);
}

TEST_CASE("the p=3 families as sets") {
  int in_family = 0, in_fprime = 0;
  std::vector<Atom> all;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) all.push_back(Atom::T({a, b}));
  for (Weight w : std::initializer_list<Weight>{{5, 0}, {0, 5}, {5, 2}, {2, 5}})
    all.push_back(Atom::T(w));
  all.push_back(Atom::L({1, 1}));
  all.push_back(Atom::M());
  for (Weight w : std::initializer_list<Weight>{{6, 0}, {0, 6}, {5, 1}, {1, 5}})
    all.push_back(Atom::T(w));
  for (const Atom& a : all) {
    auto meta = atom_metadata(3, a);
    in_family += meta.in_family;
    in_fprime += meta.in_fprime;
  }
  CHECK(in_family == 31);   // 25 core tiltings + T(5,0), T(0,5), T(5,2), T(2,5), L(1,1), M
  CHECK(in_fprime == 33);   // family minus the two exceptions, plus the four extras
}

TEST_CASE("multiplier products") {
  const Atom t10 = Atom::T({1, 0}), t01 = Atom::T({0, 1});
  auto bases = [](const std::vector<MultiplierTerm>& terms) {
    std::vector<Atom> out;
    for (auto& t : terms) out.push_back(t.base);
    std::sort(out.begin(), out.end());
    return out;
  };

  // the character identity forces T(1,3) here, not its mirror T(3,1)
  auto out = multiplier_product(3, t10, Atom::M());
  REQUIRE(out.size() == 3);
  CHECK(bases(out) ==
        std::vector<Atom>{Atom::T({1, 0}), Atom::T({1, 3}), Atom::T({4, 0})});
  for (auto& t : out) CHECK_FALSE(t.push.has_value());

  out = multiplier_product(3, t01, Atom::M());
  CHECK(bases(out) ==
        std::vector<Atom>{Atom::T({0, 1}), Atom::T({0, 4}), Atom::T({3, 1})});

  out = multiplier_product(3, t10, t10);
  CHECK(bases(out) == std::vector<Atom>{Atom::T({0, 1}), Atom::T({2, 0})});

  out = multiplier_product(3, t10, Atom::T({5, 0}));
  CHECK(bases(out) == std::vector<Atom>{Atom::T({1, 1}), Atom::T({6, 0})});

  out = multiplier_product(3, t10, Atom::T({4, 2}));
  REQUIRE(out.size() == 2);
  CHECK(out[0].base == Atom::T({3, 3}));
  CHECK_FALSE(out[0].push.has_value());
  CHECK(out[1].base == Atom::L({2, 2}));
  REQUIRE(out[1].push.has_value());
  CHECK(*out[1].push == t10);

  out = multiplier_product(3, t10, Atom::L({1, 1}));
  REQUIRE(out.size() == 2);
  CHECK(bases(out) == std::vector<Atom>{Atom::T({0, 2}), Atom::T({2, 1})});

  CHECK_THROWS_AS(multiplier_product(2, t10, t10), std::invalid_argument);
  CHECK_THROWS_AS(multiplier_product(3, Atom::T({2, 0}), t10), std::invalid_argument);
}

TEST_CASE("multiplier product character conservation over the family") {
  std::vector<Atom> family;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) family.push_back(Atom::T({a, b}));
  for (Weight w : std::initializer_list<Weight>{{5, 0}, {0, 5}, {5, 2}, {2, 5}})
    family.push_back(Atom::T(w));
  family.push_back(Atom::L({1, 1}));
  family.push_back(Atom::M());

  for (const Atom& m : {Atom::T({1, 0}), Atom::T({0, 1})})
    for (const Atom& a : family) {
      Character want = family_character(3, m) * family_character(3, a);
      Character got;
      for (const MultiplierTerm& t : multiplier_product(3, m, a)) {
        Character piece = family_character(3, t.base);
        if (t.push) piece = piece * family_character(3, *t.push).twisted(1, 3);
        got += t.mult * piece;
      }
      REQUIRE(got == want);
    }
}

TEST_CASE("split of a tilting character product") {
  Character prod = tilting_character(3, {1, 0}) * tilting_character(3, {4, 1});
  auto split = split_tilting_character(3, prod);
  AtomMultiset got;
  for (auto& [mult, w] : split) got.push_back({mult, Atom::T(w)});
  CHECK(got == AtomMultiset{{1, Atom::T({1, 0})},
                            {1, Atom::T({2, 1})},
                            {1, Atom::T({3, 2})},
                            {2, Atom::T({4, 0})},
                            {1, Atom::T({5, 1})}});
}
