#pragma once

// The finite families of indecomposable summand labels, the restricted-pair
// decomposition tables for p=2 and p=3, the exceptional M-products, and
// per-member metadata.

#include <optional>
#include <vector>

#include "sl3/tilting.hpp"

namespace sl3 {

struct NotRestricted : std::invalid_argument {
  NotRestricted(int p, Weight w)
      : std::invalid_argument("weight " + to_string(w) + " is not restricted for p=" +
                              std::to_string(p)) {}
};

enum class AtomKind { Tilting = 0, Simple = 1, M = 2 };

struct Atom {
  AtomKind kind = AtomKind::Tilting;
  Weight wt{};  // ignored for M

  static Atom T(Weight w) { return {AtomKind::Tilting, w}; }
  static Atom L(Weight w) { return {AtomKind::Simple, w}; }
  static Atom M() { return {AtomKind::M, {0, 0}}; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

  Atom flipped() const { return {kind, wt.flipped()}; }
  bool is_identity() const { return kind != AtomKind::M && wt == Weight{0, 0}; }
};

inline std::string to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Tilting: return "T" + to_string(a.wt);
    case AtomKind::Simple: return "L" + to_string(a.wt);
    case AtomKind::M: return "M";
  }
  return "?";
}

using AtomMultiset = std::vector<std::pair<long long, Atom>>;

inline AtomMultiset flipped(const AtomMultiset& m) {
  AtomMultiset out;
  out.reserve(m.size());
  for (auto& [c, a] : m) out.push_back({c, a.flipped()});
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

inline Character family_character(int p, const Atom& a) {
  switch (a.kind) {
    case AtomKind::Tilting: return tilting_character(p, a.wt);
    case AtomKind::Simple: return simple_character(p, a.wt);
    case AtomKind::M:
      if (p != 3) throw std::invalid_argument("M exists only at p=3");
      // ch L(1,1)^2 - ch L(2,2) - ch L(0,0) = chi(3,0)+chi(0,3)+chi(0,0)
      return realize_weyl({{{3, 0}, 1}, {{0, 3}, 1}, {{0, 0}, 1}});
  }
  throw std::logic_error("bad atom");
}

// -------------------------------------------------------------------------
// Restricted-pair tables.  One entry per table line; symmetric closure and
// the (0,0)-pairs are resolved at lookup time.

namespace detail {

struct TableLine {
  Weight x, y;
  AtomMultiset out;
};

inline const std::vector<TableLine>& table_lines(int p) {
  static const std::vector<TableLine> p2 = {
      {{1, 0}, {1, 0}, {{1, Atom::T({2, 0})}}},
      {{1, 0}, {0, 1}, {{1, Atom::T({1, 1})}, {1, Atom::T({0, 0})}}},
      {{1, 0}, {1, 1}, {{1, Atom::T({2, 1})}}},
      {{1, 1}, {1, 1}, {{1, Atom::T({2, 2})}, {2, Atom::T({1, 1})}}},
  };
  static const std::vector<TableLine> p3 = {
      {{1, 0}, {1, 0}, {{1, Atom::T({2, 0})}, {1, Atom::T({0, 1})}}},
      {{1, 0}, {0, 1}, {{1, Atom::T({1, 1})}}},
      {{1, 0}, {2, 0}, {{1, Atom::T({3, 0})}}},
      {{1, 0}, {1, 1}, {{1, Atom::T({2, 1})}, {1, Atom::T({0, 2})}}},
      {{1, 0}, {0, 2}, {{1, Atom::T({1, 2})}, {1, Atom::T({0, 1})}}},
      {{1, 0}, {2, 1}, {{1, Atom::T({3, 1})}, {1, Atom::T({2, 0})}}},
      {{1, 0}, {1, 2}, {{1, Atom::T({2, 2})}, {1, Atom::T({0, 3})}}},
      {{1, 0}, {2, 2}, {{1, Atom::T({3, 2})}}},
      {{2, 0}, {2, 0}, {{1, Atom::T({4, 0})}, {1, Atom::T({2, 1})}}},
      {{2, 0}, {1, 1}, {{1, Atom::T({3, 1})}, {1, Atom::T({0, 1})}}},
      {{2, 0}, {0, 2}, {{1, Atom::T({2, 2})}, {1, Atom::T({1, 1})}}},
      {{2, 0}, {2, 1}, {{1, Atom::T({4, 1})}, {1, Atom::T({2, 2})}}},
      {{2, 0}, {1, 2}, {{1, Atom::T({3, 2})}, {1, Atom::T({0, 2})}, {1, Atom::T({1, 0})}}},
      {{2, 0}, {2, 2}, {{1, Atom::T({4, 2})}, {1, Atom::T({2, 3})}}},
      {{1, 1}, {1, 1}, {{1, Atom::T({2, 2})}, {1, Atom::T({0, 0})}, {1, Atom::M()}}},
      {{1, 1}, {2, 1}, {{1, Atom::T({3, 2})}, {1, Atom::T({4, 0})}, {1, Atom::T({1, 0})}}},
      {{1, 1}, {2, 2}, {{1, Atom::T({3, 3})}, {1, Atom::T({2, 2})}}},
      {{2, 1}, {2, 1},
       {{1, Atom::T({4, 2})}, {1, Atom::T({5, 0})}, {1, Atom::T({2, 3})}, {1, Atom::T({3, 1})}}},
      {{2, 1}, {1, 2}, {{1, Atom::T({3, 3})}, {2, Atom::T({2, 2})}, {1, Atom::T({1, 1})}}},
      {{2, 1}, {2, 2}, {{1, Atom::T({4, 3})}, {2, Atom::T({3, 2})}, {1, Atom::T({2, 4})}}},
      {{2, 2}, {2, 2},
       {{1, Atom::T({4, 4})}, {1, Atom::T({3, 3})}, {1, Atom::T({5, 2})},
        {1, Atom::T({2, 5})}, {3, Atom::T({2, 2})}}},
  };
  return p == 2 ? p2 : p3;
}

inline Atom atom_for_restricted_simple(int p, Weight w) {
  if (p == 3 && w == Weight{1, 1}) return Atom::L({1, 1});
  return Atom::T(w);
}

inline AtomMultiset sorted(AtomMultiset m) {
  std::sort(m.begin(), m.end(),
            [](const auto& l, const auto& r) { return l.second < r.second; });
  return m;
}

}  // namespace detail

inline AtomMultiset restricted_decompose(int p, Weight lambda, Weight mu) {
  require_prime(p);
  if (!lambda.is_restricted(p)) throw NotRestricted(p, lambda);
  if (!mu.is_restricted(p)) throw NotRestricted(p, mu);
  if (lambda == Weight{0, 0}) return {{1, detail::atom_for_restricted_simple(p, mu)}};
  if (mu == Weight{0, 0}) return {{1, detail::atom_for_restricted_simple(p, lambda)}};
  for (const auto& line : detail::table_lines(p)) {
    if ((line.x == lambda && line.y == mu) || (line.x == mu && line.y == lambda))
      return detail::sorted(line.out);
    Weight fx = line.x.flipped(), fy = line.y.flipped();
    if ((fx == lambda && fy == mu) || (fx == mu && fy == lambda))
      return detail::sorted(flipped(line.out));
  }
  throw std::logic_error("restricted pair " + to_string(lambda) + "," + to_string(mu) +
                         " missing from table");
}

// -------------------------------------------------------------------------
// Family membership and metadata.

struct AtomMetadata {
  bool is_tilting = false;
  bool simple_restricted_socle = false;
  bool in_family = false;   // the family arising from restricted pairs
  bool in_fprime = false;   // closure covering all twisted tensor factors
};

inline AtomMetadata atom_metadata(int p, const Atom& a) {
  require_prime(p);
  AtomMetadata m;
  if (p == 2) {
    // every restricted simple equals its tilting module at p=2
    if (a.kind == AtomKind::M)
      throw std::invalid_argument("unknown atom M at p=2");
    if (a.wt.a > 2 || a.wt.b > 2 || !a.wt.is_dominant())
      throw std::invalid_argument("atom " + to_string(a) + " outside the p=2 family");
    if (a.kind == AtomKind::Simple && !a.wt.is_restricted(2))
      throw std::invalid_argument("unknown atom " + to_string(a) + " at p=2");
    return {true, true, true, true};
  }
  switch (a.kind) {
    case AtomKind::M:
      return {false, true, true, true};
    case AtomKind::Simple:
      if (a.wt == Weight{1, 1}) return {false, true, true, true};
      if (a.wt == Weight{2, 2}) return {true, true, true, true};  // = T(2,2)
      throw std::invalid_argument("unknown atom " + to_string(a) + " at p=3");
    case AtomKind::Tilting: {
      const Weight w = a.wt;
      const bool core = w.is_dominant() && w.a <= 4 && w.b <= 4;
      const bool five = w == Weight{5, 0} || w == Weight{0, 5};
      const bool exceptional = w == Weight{5, 2} || w == Weight{2, 5};
      const bool extra = w == Weight{6, 0} || w == Weight{0, 6} ||
                         w == Weight{5, 1} || w == Weight{1, 5};
      if (!core && !five && !exceptional && !extra)
        throw std::invalid_argument("unknown atom " + to_string(a) + " at p=3");
      m.is_tilting = true;
      m.simple_restricted_socle = !exceptional;
      m.in_family = core || five || exceptional;
      m.in_fprime = !exceptional;
      return m;
    }
  }
  throw std::logic_error("bad atom");
}

// -------------------------------------------------------------------------
// Splitting tensor products of tilting characters, and the p=3 multiplier
// products used by the resplitting pass.

// Greedy split of a tilting character into indecomposable tilting characters,
// one linkage class at a time.
inline std::vector<std::pair<long long, Weight>> split_tilting_character(
    int p, const Character& c) {
  BasisExpr expr = into_weyl_basis(c);
  std::vector<Weight> support;
  for (auto& [w, k] : expr) support.push_back(w);
  std::vector<std::pair<long long, Weight>> out;
  for (const auto& cls : linkage_classes(p, support)) {
    BasisExpr part;
    for (Weight w : cls) part[w] = expr.at(w);
    while (!part.empty()) {
      auto top = std::max_element(
          part.begin(), part.end(), [](const auto& l, const auto& r) {
            return HeightOrder{}(l.first, r.first);
          });
      Weight nu = top->first;
      long long k = top->second;
      if (k < 0) throw std::logic_error("negative multiplicity splitting tilting character");
      out.push_back({k, nu});
      for (auto& [w, c2] : TiltingStore::instance().weyl_expr(p, nu)) {
        auto it = part.emplace(w, 0).first;
        it->second -= k * c2;
        if (it->second == 0) part.erase(it);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

// One term of a multiplier product: a factor placed at the current degree,
// plus an optional multiplier pushed one degree higher.
struct MultiplierTerm {
  long long mult = 1;
  Atom base;
  std::optional<Atom> push;
};

namespace detail {

// T(5,2), T(2,5) and the higher tiltings reachable by the rewriting are
// returned in factored form: base atom at this degree, multiplier above.
inline std::optional<MultiplierTerm> factored_form(Weight nu) {
  const Atom t10 = Atom::T({1, 0}), t01 = Atom::T({0, 1});
  if (nu == Weight{5, 2}) return MultiplierTerm{1, Atom::L({2, 2}), t10};
  if (nu == Weight{2, 5}) return MultiplierTerm{1, Atom::L({2, 2}), t01};
  if (nu == Weight{6, 2}) return MultiplierTerm{1, Atom::T({3, 2}), t10};
  if (nu == Weight{2, 6}) return MultiplierTerm{1, Atom::T({2, 3}), t01};
  if (nu == Weight{5, 3}) return MultiplierTerm{1, Atom::T({2, 3}), t10};
  if (nu == Weight{3, 5}) return MultiplierTerm{1, Atom::T({3, 2}), t01};
  if (nu == Weight{5, 4}) return MultiplierTerm{1, Atom::T({2, 4}), t10};
  if (nu == Weight{4, 5}) return MultiplierTerm{1, Atom::T({4, 2}), t01};
  return std::nullopt;
}

}  // namespace detail

inline std::vector<MultiplierTerm> multiplier_product(int p, const Atom& m, const Atom& a);

namespace detail {

inline std::vector<MultiplierTerm> flipped(std::vector<MultiplierTerm> terms) {
  for (auto& t : terms) {
    t.base = t.base.flipped();
    if (t.push) t.push = t.push->flipped();
  }
  return terms;
}

}  // namespace detail

inline std::vector<MultiplierTerm> multiplier_product(int p, const Atom& m, const Atom& a) {
  if (p != 3) throw std::invalid_argument("multiplier products arise only at p=3");
  const Atom t10 = Atom::T({1, 0}), t01 = Atom::T({0, 1});
  if (m == t01) return detail::flipped(multiplier_product(p, t10, a.flipped()));
  if (m != t10) throw std::invalid_argument("multiplier must be T(1,0) or T(0,1)");

  if (a == Atom::L({1, 1}))
    return {{1, Atom::T({2, 1}), std::nullopt}, {1, Atom::T({0, 2}), std::nullopt}};

  // The remaining products are tilting (for a = M the three summands are
  // tilting even though M is not), so the character splits exactly.  Note
  // the split of T(1,0) x M comes out as T(1,3) + T(1,0) + T(4,0); a printed
  // form of this equation swaps T(1,3) with T(3,1), which both linkage and
  // the character identity rule out.
  Character prod = tilting_character(p, {1, 0}) * family_character(p, a);
  std::vector<MultiplierTerm> out;
  for (auto& [mult, nu] : split_tilting_character(p, prod)) {
    if (auto f = detail::factored_form(nu)) {
      f->mult = mult;
      out.push_back(*f);
    } else if (nu != Weight{0, 0}) {
      out.push_back({mult, Atom::T(nu), std::nullopt});
    }
  }
  return out;
}

// -------------------------------------------------------------------------
// The character identity lists used by table verification.

struct IdentityLine {
  Weight x, y;
  BasisExpr expansion;  // in the simple-character basis
};

inline const std::vector<IdentityLine>& chi_identity_lines(int p) {
  static const std::vector<IdentityLine> p2 = {
      {{1, 0}, {1, 0}, {{{2, 0}, 1}, {{0, 1}, 2}}},
      {{1, 0}, {0, 1}, {{{1, 1}, 1}, {{0, 0}, 1}}},
      {{1, 0}, {1, 1}, {{{2, 1}, 1}, {{0, 2}, 2}, {{1, 0}, 3}}},
      {{0, 1}, {0, 1}, {{{0, 2}, 1}, {{1, 0}, 2}}},
      {{0, 1}, {1, 1}, {{{1, 2}, 1}, {{2, 0}, 2}, {{0, 1}, 3}}},
      {{1, 1}, {1, 1}, {{{2, 2}, 1}, {{0, 3}, 2}, {{3, 0}, 2}, {{1, 1}, 2}, {{0, 0}, 4}}},
  };
  static const std::vector<IdentityLine> p3 = {
      {{1, 0}, {1, 0}, {{{2, 0}, 1}, {{0, 1}, 1}}},
      {{1, 0}, {0, 1}, {{{1, 1}, 1}, {{0, 0}, 2}}},
      {{1, 0}, {2, 0}, {{{3, 0}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}},
      {{1, 0}, {1, 1}, {{{2, 1}, 1}, {{0, 2}, 1}}},
      {{1, 0}, {0, 2}, {{{1, 2}, 1}, {{0, 1}, 1}}},
      {{1, 0}, {2, 1}, {{{3, 1}, 1}, {{1, 2}, 2}, {{2, 0}, 1}}},
      {{1, 0}, {1, 2}, {{{2, 2}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}},
      {{1, 0}, {2, 2}, {{{3, 2}, 1}, {{1, 3}, 2}, {{2, 1}, 3}}},
      {{2, 0}, {2, 0}, {{{4, 0}, 1}, {{2, 1}, 1}, {{0, 2}, 2}}},
      {{2, 0}, {1, 1}, {{{3, 1}, 1}, {{1, 2}, 2}, {{0, 1}, 1}}},
      {{2, 0}, {0, 2}, {{{2, 2}, 1}, {{1, 1}, 1}, {{0, 0}, 2}}},
      {{2, 0}, {2, 1},
       {{{4, 1}, 1}, {{2, 2}, 1}, {{0, 3}, 2}, {{3, 0}, 2}, {{1, 1}, 4}, {{0, 0}, 2}}},
      {{2, 0}, {1, 2},
       {{{3, 2}, 1}, {{1, 3}, 2}, {{2, 1}, 3}, {{0, 2}, 1}, {{1, 0}, 1}}},
      {{2, 0}, {2, 2},
       {{{4, 2}, 1}, {{2, 3}, 1}, {{0, 4}, 2}, {{3, 1}, 2}, {{1, 2}, 3}, {{2, 0}, 3}}},
      {{1, 1}, {1, 1},
       {{{2, 2}, 1}, {{0, 3}, 1}, {{3, 0}, 1}, {{1, 1}, 2}, {{0, 0}, 2}}},
      {{1, 1}, {2, 1},
       {{{3, 2}, 1}, {{1, 3}, 2}, {{4, 0}, 1}, {{2, 1}, 3}, {{0, 2}, 2}, {{1, 0}, 1}}},
      {{1, 1}, {2, 2},
       {{{3, 3}, 1}, {{1, 4}, 2}, {{4, 1}, 2}, {{2, 2}, 1}, {{0, 3}, 4}, {{3, 0}, 4},
        {{1, 1}, 6}, {{0, 0}, 5}}},
      {{2, 1}, {2, 1},
       {{{4, 2}, 1}, {{2, 3}, 1}, {{0, 4}, 2}, {{5, 0}, 1}, {{3, 1}, 3}, {{1, 2}, 5},
        {{2, 0}, 3}, {{0, 1}, 2}}},
      {{2, 1}, {1, 2},
       {{{3, 3}, 1}, {{1, 4}, 2}, {{4, 1}, 2}, {{2, 2}, 2}, {{0, 3}, 4}, {{3, 0}, 4},
        {{1, 1}, 7}, {{0, 0}, 7}}},
      {{2, 1}, {2, 2},
       {{{4, 3}, 1}, {{2, 4}, 1}, {{0, 5}, 2}, {{5, 1}, 2}, {{3, 2}, 2}, {{1, 3}, 4},
        {{4, 0}, 2}, {{2, 1}, 6}, {{0, 2}, 3}, {{1, 0}, 5}}},
      {{2, 2}, {2, 2},
       {{{4, 4}, 1}, {{2, 5}, 1}, {{0, 6}, 2}, {{5, 2}, 1}, {{3, 3}, 3}, {{1, 4}, 6},
        {{6, 0}, 2}, {{4, 1}, 6}, {{2, 2}, 3}, {{0, 3}, 8}, {{3, 0}, 8}, {{1, 1}, 11},
        {{0, 0}, 15}}},
  };
  return p == 2 ? p2 : p3;
}

}  // namespace sl3
