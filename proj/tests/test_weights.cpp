#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sl3/weight.hpp"

using namespace sl3;

TEST_CASE("simple reflections") {
  CHECK(reflect(1, {1, 0}) == Weight{-1, 1});
  CHECK(reflect(2, {1, 0}) == Weight{1, 0});
  CHECK(reflect(1, reflect(1, {3, 5})) == Weight{3, 5});
  CHECK(reflect(2, reflect(2, {-4, 7})) == Weight{-4, 7});
  CHECK_THROWS_AS(reflect(3, {0, 0}), std::invalid_argument);
}

TEST_CASE("weyl orbits") {
  CHECK(weyl_orbit({0, 0}) == std::vector<Weight>{{0, 0}});
  auto o10 = weyl_orbit({1, 0});
  CHECK(o10.size() == 3);
  CHECK(std::set<Weight>(o10.begin(), o10.end()) ==
        std::set<Weight>{{1, 0}, {-1, 1}, {0, -1}});
  CHECK(weyl_orbit({1, 1}).size() == 6);

  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      auto orbit = weyl_orbit({a, b});
      auto brute = oracles::full_orbit({a, b});
      std::set<Weight> bs(brute.begin(), brute.end());
      CHECK(std::set<Weight>(orbit.begin(), orbit.end()) == bs);
      CHECK((orbit.size() == 1 || orbit.size() == 3 || orbit.size() == 6));
    }
}

TEST_CASE("symmetry flip") {
  CHECK(Weight{5, 2}.flipped() == Weight{2, 5});
  CHECK(Weight{4, 3}.flipped() == Weight{3, 4});
  CHECK(Weight{7, 7}.flipped() == Weight{7, 7});
}

TEST_CASE("steinberg digits") {
  auto d = steinberg_digits(2, {7, 2});
  CHECK(d.digits == std::vector<Weight>{{1, 0}, {1, 1}, {1, 0}});
  d = steinberg_digits(3, {5, 4});
  CHECK(d.digits == std::vector<Weight>{{2, 1}, {1, 1}});
  CHECK(steinberg_digits(3, {0, 0}).digits.empty());
  CHECK_THROWS_AS(steinberg_digits(3, {-1, 0}), NonDominantWeight);
  CHECK_THROWS_AS(steinberg_digits(5, {1, 0}), UnsupportedPrime);
}

TEST_CASE("tilting digits") {
  CHECK(tilting_digits(3, {9, 9}).digits == std::vector<Weight>{{3, 3}, {2, 2}});
  CHECK(tilting_digits(3, {7, 7}).digits == std::vector<Weight>{{4, 4}, {1, 1}});
  CHECK(tilting_digits(2, {13, 5}).digits ==
        std::vector<Weight>{{1, 1}, {2, 2}, {2, 0}});
  CHECK(tilting_digits(3, {5, 2}).digits == std::vector<Weight>{{2, 2}, {1, 0}});
  CHECK(tilting_digits(3, {4, 1}).digits == std::vector<Weight>{{4, 1}});
  CHECK(tilting_digits(3, {0, 0}).digits.empty());
}

TEST_CASE("digit reconstruction over the full range") {
  for (int p : {2, 3})
    for (int a = 0; a <= 200; ++a)
      for (int b = 0; b <= 200; ++b) {
        Weight w{a, b};
        REQUIRE(steinberg_digits(p, w).reconstruct() == w);
        REQUIRE(tilting_digits(p, w).reconstruct() == w);
        for (auto& dig : steinberg_digits(p, w).digits) REQUIRE(dig.is_restricted(p));
        auto td = tilting_digits(p, w).digits;
        for (size_t j = 0; j + 1 < td.size(); ++j) REQUIRE(in_steinberg_box(p, td[j]));
      }
}

namespace {

// Enumerate every vector [d_0..d_m] with d_j in the box for j<m and d_m a
// dominant digit failing the box-entry condition, whose reconstruction has
// coordinates <= bound.  Records how many vectors hit each weight.
void enumerate_expansions(int p, int bound, Weight acc, int pw,
                          std::vector<Weight>& prefix,
                          std::map<Weight, std::vector<std::vector<Weight>>>& hits) {
  // close the vector with a failing last digit; a trailing (0,0) is recorded
  // in trimmed form so equality against tilting_digits is direct
  for (int a = 0; pw * a + acc.a <= bound; ++a)
    for (int b = 0; pw * b + acc.b <= bound; ++b) {
      if (a >= p - 1 && b >= p - 1) continue;  // must fail for some root
      auto full = prefix;
      if (!(a == 0 && b == 0) || full.empty()) full.push_back({a, b});
      hits[acc + pw * Weight{a, b}].push_back(full);
    }
  // or push another box digit and recurse
  for (int a = p - 1; a <= 2 * p - 2; ++a)
    for (int b = p - 1; b <= 2 * p - 2; ++b) {
      Weight next = acc + pw * Weight{a, b};
      if (next.a > bound || next.b > bound) continue;
      prefix.push_back({a, b});
      enumerate_expansions(p, bound, next, pw * p, prefix, hits);
      prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("tilting digit uniqueness by exhaustive search") {
  for (int p : {2, 3}) {
    std::vector<Weight> prefix;
    std::map<Weight, std::vector<std::vector<Weight>>> hits;
    enumerate_expansions(p, 30, {0, 0}, 1, prefix, hits);
    for (int a = 0; a <= 30; ++a)
      for (int b = 0; b <= 30; ++b) {
        Weight w{a, b};
        REQUIRE(hits.count(w) == 1);
        REQUIRE(hits[w].size() == 1);
        auto canonical = hits[w].front();
        while (!canonical.empty() && canonical.back() == Weight{0, 0})
          canonical.pop_back();
        REQUIRE(tilting_digits(p, w).digits == canonical);
      }
  }
}

TEST_CASE("dot linkage examples") {
  CHECK(dot_linked(3, {4, 1}, {0, 0}));
  CHECK_FALSE(dot_linked(3, {2, 2}, {4, 1}));
  CHECK(dot_linked(3, {7, 3}, {7, 3}));
  CHECK(dot_linked(2, {2, 0}, {0, 1}));
}

TEST_CASE("dot linkage is an equivalence relation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 12);
  for (int p : {2, 3}) {
    for (int trial = 0; trial < 400; ++trial) {
      Weight x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)}, z{coord(rng), coord(rng)};
      CHECK(dot_linked(p, x, x));
      CHECK(dot_linked(p, x, y) == dot_linked(p, y, x));
      if (dot_linked(p, x, y) && dot_linked(p, y, z)) CHECK(dot_linked(p, x, z));
      // symmetry equivariance
      CHECK(dot_linked(p, x, y) == dot_linked(p, x.flipped(), y.flipped()));
    }
  }
}

TEST_CASE("linkage classes") {
  auto classes = linkage_classes(
      3, {{2, 2}, {4, 1}, {3, 0}, {0, 3}, {1, 1}, {0, 0}});
  REQUIRE(classes.size() == 2);
  std::set<std::set<Weight>> got;
  for (auto& c : classes) got.insert(std::set<Weight>(c.begin(), c.end()));
  std::set<std::set<Weight>> want{
      {{2, 2}},
      {{4, 1}, {3, 0}, {0, 3}, {1, 1}, {0, 0}}};
  CHECK(got == want);

  CHECK(linkage_classes(2, {{2, 0}, {0, 1}}).size() == 1);
  CHECK(linkage_classes(3, {}).empty());
}
