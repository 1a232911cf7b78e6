#pragma once

// The end-to-end pipeline: Steinberg digit pairing, per-digit table lookup,
// the merged direct sum over digit sequences, the p=3 resplitting rewriting
// system, canonical merging of twisted tilting products, and the
// indecomposability / tilting predicates.

#include <sstream>

#include "sl3/family.hpp"

namespace sl3 {

struct Factor {
  Atom atom;
  int twist = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// total order used for canonical summand output
inline bool factor_less(const Factor& l, const Factor& r) {
  if (l.twist != r.twist) return l.twist < r.twist;
  if (l.atom.kind != r.atom.kind) return l.atom.kind < r.atom.kind;
  return l.atom.wt < r.atom.wt;
}

struct Summand {
  long long mult = 1;
  std::vector<Factor> factors;  // twists strictly increasing; empty = trivial module

  friend bool operator==(const Summand&, const Summand&) = default;
};

inline bool summand_factors_less(const std::vector<Factor>& l, const std::vector<Factor>& r) {
  return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end(), factor_less);
}

inline std::string to_string(const Factor& f) {
  std::string s = to_string(f.atom);
  if (f.twist > 0) s += "^[" + std::to_string(f.twist) + "]";
  return s;
}

inline std::string to_string(const Summand& s) {
  std::ostringstream os;
  if (s.mult != 1) os << s.mult << " ";
  if (s.factors.empty()) {
    os << "T(0,0)";
    return os.str();
  }
  const bool parens = s.factors.size() > 1 && s.mult != 1;
  if (parens) os << "(";
  for (size_t i = 0; i < s.factors.size(); ++i) {
    if (i) os << " ⊗ ";  // tensor sign
    os << to_string(s.factors[i]);
  }
  if (parens) os << ")";
  return os.str();
}

struct Decomposition {
  int p = 0;
  Weight lambda, mu;
  std::vector<Summand> summands;          // canonical order
  std::vector<bool> indecomposable;       // parallel to summands
  std::vector<std::string> errata;
};

inline std::string to_string(const Decomposition& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.summands.size(); ++i) {
    if (i) os << " ⊕ ";  // direct-sum sign
    os << to_string(d.summands[i]);
  }
  if (d.summands.empty()) os << "0";
  return os.str();
}

// -------------------------------------------------------------------------
// Characters of summands; exact verification currency.

inline Character factor_character(int p, const Factor& f) {
  return family_character(p, f.atom).twisted(f.twist, p);
}

inline Character summand_character(int p, const Summand& s) {
  Character out = Character::unit();
  for (const Factor& f : s.factors) out = out * factor_character(p, f);
  return out;
}

inline Character decomposition_character(const Decomposition& d) {
  Character out;
  for (const Summand& s : d.summands) out += s.mult * summand_character(d.p, s);
  return out;
}

inline bool verify_decomposition(const Decomposition& d) {
  return decomposition_character(d) ==
         simple_character(d.p, d.lambda) * simple_character(d.p, d.mu);
}

// -------------------------------------------------------------------------
// Resplitting (p=3): eliminate T(5,2)/T(2,5) factors that sit below another
// factor by pushing a multiplier one degree up, to fixpoint.

namespace detail {

struct ResplitState {
  long long mult;
  std::map<int, Atom> factors;
  std::optional<Atom> pending;
  int degree = 0;  // degree the pending multiplier lives at / scan position
};

inline std::vector<Summand> resplit_run(int p, const Summand& s, bool* used_m = nullptr) {
  std::vector<Summand> out;
  std::vector<ResplitState> work;
  {
    ResplitState st;
    st.mult = s.mult;
    for (const Factor& f : s.factors) st.factors.emplace(f.twist, f.atom);
    work.push_back(std::move(st));
  }
  const Atom t52 = Atom::T({5, 2}), t25 = Atom::T({2, 5});
  while (!work.empty()) {
    ResplitState st = std::move(work.back());
    work.pop_back();

    if (st.pending) {
      const int d = st.degree;
      auto it = st.factors.find(d);
      if (it == st.factors.end()) {
        // multiplier past the factor: it becomes an atom of its own
        st.factors.emplace(d, *st.pending);
        st.pending.reset();
        st.degree = d + 1;
        work.push_back(std::move(st));
        continue;
      }
      if (used_m && it->second.kind == AtomKind::M) *used_m = true;
      for (const MultiplierTerm& term : multiplier_product(p, *st.pending, it->second)) {
        ResplitState next = st;
        next.mult *= term.mult;
        if (term.base.is_identity())
          next.factors.erase(d);
        else
          next.factors[d] = term.base;
        next.pending = term.push;
        next.degree = d + 1;
        work.push_back(std::move(next));
      }
      continue;
    }

    // no pending multiplier: scan for the next exceptional factor
    auto it = st.factors.lower_bound(st.degree);
    while (it != st.factors.end() && it->second != t52 && it->second != t25) ++it;
    if (it == st.factors.end()) {
      Summand done;
      done.mult = st.mult;
      for (auto& [tw, atom] : st.factors) done.factors.push_back({atom, tw});
      out.push_back(std::move(done));
      continue;
    }
    const bool is52 = it->second == t52;
    st.pending = is52 ? Atom::T({1, 0}) : Atom::T({0, 1});
    st.factors[it->first] = Atom::L({2, 2});
    st.degree = it->first + 1;
    work.push_back(std::move(st));
  }
  return out;
}

}  // namespace detail

inline std::vector<Summand> resplit(int p, const Summand& s) {
  if (p != 3) throw std::invalid_argument("resplit applies only at p=3");
  return detail::resplit_run(p, s);
}

// -------------------------------------------------------------------------
// Canonical form: elide identity atoms, expand tilting factors into their
// digits, and re-merge every run licensed by the twisted tensor product
// theorem.  L(2,2) is identified with T(2,2); L(1,1) and M never merge.

inline Summand canonicalize(int p, const Summand& s) {
  require_prime(p);
  std::map<int, Atom> slots;
  for (const Factor& f : s.factors) {
    Atom a = f.atom;
    if (a.is_identity()) continue;
    if (a == Atom::L({(p - 1), (p - 1)})) a = Atom::T(a.wt);
    if (a.kind != AtomKind::Tilting) {
      slots.emplace(f.twist, a);
      continue;
    }
    DigitVector d = tilting_digits(p, a.wt);
    bool collision = false;
    for (size_t j = 0; j < d.digits.size(); ++j)
      if (j > 0 && (slots.count(f.twist + static_cast<int>(j)) ||
                    std::any_of(s.factors.begin(), s.factors.end(), [&](const Factor& g) {
                      return g.twist == f.twist + static_cast<int>(j);
                    })))
        collision = true;
    if (collision || d.digits.empty()) {
      slots.emplace(f.twist, a);
      continue;
    }
    for (size_t j = 0; j < d.digits.size(); ++j)
      slots.emplace(f.twist + static_cast<int>(j), Atom::T(d.digits[j]));
  }

  Summand out;
  out.mult = s.mult;
  for (auto it = slots.begin(); it != slots.end();) {
    if (it->second.kind != AtomKind::Tilting) {
      out.factors.push_back({it->second, it->first});
      ++it;
      continue;
    }
    // grow a mergeable run: extend while the current digit lies in the
    // Steinberg box and the next consecutive twist holds a tilting atom
    const int start = it->first;
    Weight acc = it->second.wt;
    int span = 1;
    int pw = p;
    auto next = std::next(it);
    Weight last = it->second.wt;
    while (in_steinberg_box(p, last) && next != slots.end() &&
           next->first == start + span && next->second.kind == AtomKind::Tilting) {
      last = next->second.wt;
      acc = acc + pw * last;
      pw *= p;
      ++span;
      ++next;
    }
    out.factors.push_back({Atom::T(acc), start});
    it = next;
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

// -------------------------------------------------------------------------
// Known discrepancies between printed example answers and the character
// oracle; the oracle-consistent answer is always emitted, with a note.

namespace detail {

inline std::vector<std::string> known_errata(int p, Weight lambda, Weight mu) {
  auto matches = [&](Weight x, Weight y) {
    return (lambda == x && mu == y) || (lambda == y && mu == x) ||
           (lambda == x.flipped() && mu == y.flipped()) ||
           (lambda == y.flipped() && mu == x.flipped());
  };
  std::vector<std::string> notes;
  if (p == 2 && matches({7, 2}, {6, 3}))
    notes.push_back(
        "coefficient of T(6,2)^[1] is 1, not 2: the total dimension 5184 "
        "admits only one copy, and the character identity verifies with 1");
  if (p == 3 && matches({5, 4}, {4, 5}))
    notes.push_back(
        "the summand T(1,1) ⊗ T(2,2)^[1] (dim 243) is sometimes printed "
        "merged as T(7,7), but T(7,7) = T(4,4) ⊗ T(1,1)^[1] has dim 2916; "
        "the unmerged product is emitted");
  if (p == 3 && matches({5, 2}, {5, 4}))
    notes.push_back(
        "the identification of this product with T(10,6) fails the digit "
        "criterion (the degree-0 pair {(2,2),(2,1)} is not minuscule times "
        "Steinberg); the full decomposition is emitted");
  return notes;
}

// Simple restricted socle of a single pipeline factor, judged digit-wise.
inline bool factor_socle_restricted(int p, const Atom& a) {
  switch (a.kind) {
    case AtomKind::M:
      return true;
    case AtomKind::Simple:
      return a.wt.is_restricted(p);
    case AtomKind::Tilting: {
      for (Weight d : tilting_digits(p, a.wt).digits) {
        if (in_steinberg_box(p, d)) continue;
        AtomMetadata m;
        try {
          m = atom_metadata(p, Atom::T(d));
        } catch (const std::invalid_argument&) {
          return false;
        }
        if (!m.simple_restricted_socle) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline bool summand_indecomposable(int p, const Summand& s) {
  for (const Factor& f : s.factors)
    if (!detail::factor_socle_restricted(p, f.atom)) return false;
  return true;
}

// -------------------------------------------------------------------------
// The pipeline.

struct DecomposeOptions {
  bool canonical = true;  // run the canonical merge (step 5)
};

inline Decomposition tensor_decompose(int p, Weight lambda, Weight mu,
                                      DecomposeOptions opts = {}) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  if (!mu.is_dominant()) throw NonDominantWeight(mu);

  DigitVector dl = steinberg_digits(p, lambda);
  DigitVector dm = steinberg_digits(p, mu);
  const size_t degrees = std::max(dl.digits.size(), dm.digits.size());
  dl.digits.resize(degrees, {0, 0});
  dm.digits.resize(degrees, {0, 0});

  // cartesian combination of the per-degree tables
  std::vector<Summand> raw{Summand{1, {}}};
  for (size_t j = 0; j < degrees; ++j) {
    AtomMultiset part = restricted_decompose(p, dl.digits[j], dm.digits[j]);
    std::vector<Summand> next;
    for (const Summand& s : raw)
      for (const auto& [mult, atom] : part) {
        Summand t = s;
        t.mult *= mult;
        if (!atom.is_identity()) t.factors.push_back({atom, static_cast<int>(j)});
        next.push_back(std::move(t));
      }
    raw = std::move(next);
  }

  bool used_m_multiplier = false;
  if (p == 3) {
    std::vector<Summand> split;
    for (const Summand& s : raw)
      for (Summand& t : detail::resplit_run(p, s, &used_m_multiplier))
        split.push_back(std::move(t));
    raw = std::move(split);
  }

  if (opts.canonical)
    for (Summand& s : raw) s = canonicalize(p, s);

  // collect like summands
  std::map<std::vector<Factor>, long long,
           bool (*)(const std::vector<Factor>&, const std::vector<Factor>&)>
      collected(summand_factors_less);
  for (const Summand& s : raw) collected[s.factors] += s.mult;

  Decomposition out;
  out.p = p;
  out.lambda = lambda;
  out.mu = mu;
  for (auto& [factors, mult] : collected) {
    out.summands.push_back({mult, factors});
    out.indecomposable.push_back(summand_indecomposable(p, out.summands.back()));
  }
  out.errata = detail::known_errata(p, lambda, mu);
  if (used_m_multiplier)
    out.errata.push_back(
        "a pushed multiplier met an M factor; the character identity splits "
        "T(1,0) ⊗ M as T(1,3) ⊕ T(1,0) ⊕ T(4,0) (a printed form "
        "of this equation swaps T(1,3) with T(3,1))");
  return out;
}

// -------------------------------------------------------------------------
// Closed-form digit predicates.

inline bool is_indecomposable_pair(int p, Weight lambda, Weight mu) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  if (!mu.is_dominant()) throw NonDominantWeight(mu);
  DigitVector dl = steinberg_digits(p, lambda), dm = steinberg_digits(p, mu);
  const size_t degrees = std::max(dl.digits.size(), dm.digits.size());
  dl.digits.resize(degrees, {0, 0});
  dm.digits.resize(degrees, {0, 0});
  auto pair_ok = [p](Weight x, Weight y) {
    if (x == Weight{0, 0} || y == Weight{0, 0}) return true;
    if (y < x) std::swap(x, y);
    if (p == 2)
      return (x == Weight{1, 0} && y == Weight{1, 0}) ||
             (x == Weight{0, 1} && y == Weight{0, 1}) ||
             (x == Weight{1, 0} && y == Weight{1, 1}) ||
             (x == Weight{0, 1} && y == Weight{1, 1});
    return (x == Weight{0, 1} && y == Weight{1, 0}) ||
           (x == Weight{1, 0} && y == Weight{2, 0}) ||
           (x == Weight{1, 0} && y == Weight{2, 2}) ||
           (x == Weight{0, 1} && y == Weight{0, 2}) ||
           (x == Weight{0, 1} && y == Weight{2, 2});
  };
  for (size_t j = 0; j < degrees; ++j)
    if (!pair_ok(dl.digits[j], dm.digits[j])) return false;
  return true;
}

inline bool is_tilting_pair(int p, Weight lambda, Weight mu) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  if (!mu.is_dominant()) throw NonDominantWeight(mu);
  DigitVector dl = steinberg_digits(p, lambda), dm = steinberg_digits(p, mu);
  const size_t degrees = std::max(dl.digits.size(), dm.digits.size());
  if (degrees == 0) return true;  // trivial tensor product
  dl.digits.resize(degrees, {0, 0});
  dm.digits.resize(degrees, {0, 0});
  const Weight steinberg{p - 1, p - 1};
  for (size_t j = 0; j + 1 < degrees; ++j) {
    Weight x = dl.digits[j], y = dm.digits[j];
    if (!((is_minuscule(x) && y == steinberg) || (is_minuscule(y) && x == steinberg)))
      return false;
  }
  // top digit pair must be one of the indecomposable cases, and its tensor
  // product must itself be tilting: a zero digit against (1,1) at p=3 gives
  // the non-tilting simple L(1,1) and is excluded
  Weight tx = dl.digits[degrees - 1], ty = dm.digits[degrees - 1];
  if (p == 3 && ((tx == Weight{0, 0} && ty == Weight{1, 1}) ||
                 (ty == Weight{0, 0} && tx == Weight{1, 1})))
    return false;
  return is_indecomposable_pair(p, tx, ty);
}

// structural counterparts used for the predicate cross-checks
inline bool pipeline_indecomposable(const Decomposition& d) {
  return d.summands.size() == 1 && d.summands.front().mult == 1;
}

inline bool pipeline_tilting(const Decomposition& d) {
  if (!pipeline_indecomposable(d)) return false;
  const Summand& s = d.summands.front();
  if (s.factors.empty()) return true;  // trivial module = T(0,0)
  return s.factors.size() == 1 && s.factors.front().twist == 0 &&
         s.factors.front().atom.kind == AtomKind::Tilting &&
         s.factors.front().atom.wt == d.lambda + d.mu;
}

}  // namespace sl3
