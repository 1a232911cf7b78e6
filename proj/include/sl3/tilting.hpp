#pragma once

// Tilting-module characters: base tables for p=2 and p=3 stored as
// Weyl-basis vectors, the twisted tensor product recursion over tilting
// digits, the two convention-seeded characters T(6,0), T(5,1) (p=3) and
// their mates, and Donkin's two character formulas.

#include <mutex>
#include <optional>
#include <vector>

#include "sl3/character.hpp"
#include "sl3/weight.hpp"

namespace sl3 {

struct UnknownTiltingCharacter : std::runtime_error {
  int p;
  Weight weight;
  UnknownTiltingCharacter(int p_, Weight w)
      : std::runtime_error("no known tilting character for T" + to_string(w) +
                           " at p=" + std::to_string(p_)),
        p(p_),
        weight(w) {}
};

enum class Provenance { PaperTable, DonkinDigits, DerivedByConvention };

inline const char* to_string(Provenance pr) {
  switch (pr) {
    case Provenance::PaperTable: return "paper-table";
    case Provenance::DonkinDigits: return "donkin-digits";
    case Provenance::DerivedByConvention: return "derived-by-convention";
  }
  return "?";
}

class TiltingStore {
 public:
  static TiltingStore& instance() {
    static TiltingStore store;
    return store;
  }

  struct Entry {
    BasisExpr expr;       // Weyl-basis vector
    Provenance prov;
    Character character;  // realized form
  };

  const Entry& lookup(int p, Weight nu) {
    require_prime(p);
    if (!nu.is_dominant()) throw NonDominantWeight(nu);
    std::lock_guard<std::mutex> lock(mu_);
    return lookup_locked(p, nu);
  }

  Character character(int p, Weight nu) { return lookup(p, nu).character; }
  BasisExpr weyl_expr(int p, Weight nu) { return lookup(p, nu).expr; }
  Provenance provenance(int p, Weight nu) { return lookup(p, nu).prov; }

  bool is_base_entry(int p, Weight nu) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find({p, nu});
    return it != entries_.end() && it->second.prov == Provenance::PaperTable;
  }

  struct Record {
    int p;
    Weight weight;
    BasisExpr expr;
    Provenance prov;
  };

  // Derived entries only; the base tables are compiled in.
  std::vector<Record> derived_records() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<Record> out;
    for (auto& [key, e] : entries_)
      if (e.prov != Provenance::PaperTable)
        out.push_back({key.first, key.second, e.expr, e.prov});
    return out;
  }

  void import_record(const Record& r) {
    std::lock_guard<std::mutex> lock(mu_);
    if (entries_.count({r.p, r.weight})) return;
    insert_locked(r.p, r.weight, r.expr, r.prov);
  }

 private:
  TiltingStore() { seed_tables(); }

  using Key = std::pair<int, Weight>;
  mutable std::mutex mu_;
  std::map<Key, Entry> entries_;

  void insert_locked(int p, Weight nu, BasisExpr expr, Provenance prov) {
    Entry e;
    e.character = realize_weyl(expr);
    e.expr = std::move(expr);
    e.prov = prov;
    entries_.emplace(Key{p, nu}, std::move(e));
  }

  const Entry& lookup_locked(int p, Weight nu) {
    auto it = entries_.find({p, nu});
    if (it != entries_.end()) return it->second;

    DigitVector d = tilting_digits(p, nu);
    if (d.digits.size() <= 1) {
      // nu is its own last digit and not in the table
      if (p == 3) {
        if (nu == Weight{6, 0} || nu == Weight{5, 1} || nu == Weight{0, 6} ||
            nu == Weight{1, 5}) {
          derive_convention_locked(nu);
          return entries_.at({p, nu});
        }
      }
      throw UnknownTiltingCharacter(p, nu);
    }
    Character prod = Character::unit();
    for (size_t j = 0; j < d.digits.size(); ++j) {
      const Entry& digit = lookup_locked(p, d.digits[j]);
      prod = prod * digit.character.twisted(static_cast<int>(j), p);
    }
    insert_locked(p, nu, into_weyl_basis(prod), Provenance::DonkinDigits);
    return entries_.at({p, nu});
  }

  // ch T(6,0) := ch T(1,0) * ch T(5,0) minus the maximal subtractable
  // multiset of table characters, greedy by dimension; ch T(5,1) likewise
  // from ch T(1,0) * ch T(4,1).  Mates by symmetry.
  void derive_convention_locked(Weight nu) {
    const int p = 3;
    Weight base = nu.flipped() < nu ? nu.flipped() : nu;  // (0,6)/(1,5) via flip
    Weight seed = (base == Weight{0, 6}) ? Weight{5, 0} : Weight{4, 1};
    Weight canon = base.flipped();  // (6,0) or (5,1)
    Character prod =
        entries_.at({p, Weight{1, 0}}).character * entries_.at({p, seed}).character;
    BasisExpr rem = into_weyl_basis(prod);

    // candidates: base-table entries sorted by dimension, largest first
    std::vector<std::pair<long long, Key>> cands;
    for (auto& [key, e] : entries_)
      if (key.first == p && e.prov == Provenance::PaperTable)
        cands.push_back({e.character.dim(), key});
    std::sort(cands.begin(), cands.end(), [](const auto& l, const auto& r) {
      if (l.first != r.first) return l.first > r.first;
      return l.second < r.second;
    });

    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& [dim, key] : cands) {
        const BasisExpr& sub = entries_.at(key).expr;
        bool fits = true;
        for (auto& [w, c] : sub) {
          auto it = rem.find(w);
          if (it == rem.end() || it->second < c) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        for (auto& [w, c] : sub) {
          auto it = rem.find(w);
          it->second -= c;
          if (it->second == 0) rem.erase(it);
        }
        progress = true;
        break;
      }
    }
    if (rem.count(canon) != 1 || rem.at(canon) != 1)
      throw std::logic_error("convention remainder has no leading T" + to_string(canon));
    BasisExpr flipped;
    for (auto& [w, c] : rem) flipped[w.flipped()] = c;
    insert_locked(p, canon, rem, Provenance::DerivedByConvention);
    insert_locked(p, canon.flipped(), flipped, Provenance::DerivedByConvention);
  }

  void add_pair(int p, Weight nu, BasisExpr expr) {
    insert_locked(p, nu, expr, Provenance::PaperTable);
    if (nu.flipped() != nu) {
      BasisExpr flipped;
      for (auto& [w, c] : expr) flipped[w.flipped()] = c;
      insert_locked(p, nu.flipped(), std::move(flipped), Provenance::PaperTable);
    }
  }

  void seed_tables() {
    // p = 2
    add_pair(2, {0, 0}, {{{0, 0}, 1}});
    add_pair(2, {1, 0}, {{{1, 0}, 1}});
    add_pair(2, {1, 1}, {{{1, 1}, 1}});
    add_pair(2, {2, 0}, {{{2, 0}, 1}, {{0, 1}, 1}});
    add_pair(2, {2, 1}, {{{2, 1}, 1}, {{0, 2}, 1}, {{1, 0}, 1}});
    add_pair(2, {2, 2}, {{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{0, 0}, 1}});

    // p = 3: simple tiltings
    for (Weight w : std::initializer_list<Weight>{
             {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {5, 2}})
      add_pair(3, w, {{w, 1}});
    add_pair(3, {1, 1}, {{{1, 1}, 1}, {{0, 0}, 1}});
    add_pair(3, {3, 0}, {{{3, 0}, 1}, {{1, 1}, 1}});
    add_pair(3, {4, 0}, {{{4, 0}, 1}, {{0, 2}, 1}});
    add_pair(3, {3, 1}, {{{3, 1}, 1}, {{1, 2}, 1}});
    add_pair(3, {5, 0}, {{{5, 0}, 1}, {{0, 1}, 1}});
    add_pair(3, {3, 2}, {{{3, 2}, 1}, {{1, 3}, 1}, {{2, 1}, 1}});
    add_pair(3, {4, 1}, {{{4, 1}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 1}});
    add_pair(3, {4, 2}, {{{4, 2}, 1}, {{0, 4}, 1}, {{2, 0}, 1}});
    add_pair(3, {3, 3},
             {{{3, 3}, 1}, {{4, 1}, 1}, {{1, 4}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 1}});
    add_pair(3, {4, 3}, {{{4, 3}, 1}, {{5, 1}, 1}, {{0, 5}, 1}, {{1, 0}, 1}});
    add_pair(3, {4, 4},
             {{{4, 4}, 1}, {{6, 0}, 1}, {{0, 6}, 1}, {{3, 3}, 1},
              {{4, 1}, 1}, {{1, 4}, 1}, {{1, 1}, 1}, {{0, 0}, 1}});
  }
};

inline Character tilting_character(int p, Weight nu) {
  return TiltingStore::instance().character(p, nu);
}

// -------------------------------------------------------------------------
// Donkin's character formulas.

// ch T((p-1)rho + lambda) = ch L((p-1)rho) * sum_{nu in W.lambda} e(nu),
// valid for <lambda, alpha0^vee> = a+b <= p.
inline Character donkin_restricted_tilting_char(int p, Weight lambda) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  if (lambda.a + lambda.b > p)
    throw std::invalid_argument("donkin_restricted_tilting_char requires a+b <= p");
  return simple_character(p, (p - 1) * rho) * orbit_sum(lambda);
}

// (T((p-1)rho + lambda + p*mu) : nabla(nu)) = sum_{xi in N(nu)} (T(mu) : nabla(xi))
// with N(nu) = { xi dominant : nu + rho - p(xi + rho) in W.lambda }.
inline long long donkin_delta_multiplicity(int p, Weight lambda, Weight mu, Weight nu) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  if (!mu.is_dominant()) throw NonDominantWeight(mu);
  if (!nu.is_dominant()) throw NonDominantWeight(nu);
  if (lambda.a + lambda.b > p)
    throw std::invalid_argument("donkin_delta_multiplicity requires a+b <= p");
  BasisExpr inner = TiltingStore::instance().weyl_expr(p, mu);
  long long total = 0;
  for (Weight o : weyl_orbit(lambda)) {
    Weight d = nu + rho - o;  // must equal p(xi + rho)
    if (d.a % p != 0 || d.b % p != 0) continue;
    Weight xi = Weight{d.a / p, d.b / p} - rho;
    if (!xi.is_dominant()) continue;
    auto it = inner.find(xi);
    if (it != inner.end()) total += it->second;
  }
  return total;
}

}  // namespace sl3
