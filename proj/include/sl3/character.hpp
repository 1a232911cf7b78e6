#pragma once

// The formal character ring of SL3: finite sparse maps Weight -> integer,
// with products, Frobenius twists, Weyl characters via Freudenthal's
// recursion, and expansions into the Weyl and simple bases.

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "sl3/weight.hpp"

namespace sl3 {

struct NonInvariantInput : std::runtime_error {
  explicit NonInvariantInput(const std::string& what) : std::runtime_error(what) {}
};

class Character {
 public:
  Character() = default;

  static Character basis(Weight w, long long c = 1) {
    Character x;
    x.add(w, c);
    return x;
  }
  static Character unit() { return basis({0, 0}, 1); }

  const std::map<Weight, long long>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  long long coeff(Weight w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? 0 : it->second;
  }

  void add(Weight w, long long c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  long long dim() const {
    long long s = 0;
    for (auto& [w, c] : coeffs_) s += c;
    return s;
  }

  Character& operator+=(const Character& o) {
    for (auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (auto& [w, c] : o.coeffs_) add(w, -c);
    return *this;
  }
  Character& operator*=(long long k) {
    if (k == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [w, c] : coeffs_) c *= k;
    return *this;
  }
  friend Character operator+(Character x, const Character& y) { return x += y; }
  friend Character operator-(Character x, const Character& y) { return x -= y; }
  friend Character operator*(long long k, Character x) { return x *= k; }

  // Convolution of weight multiplicities, accumulated in a dense grid over
  // the bounding box of the product support.
  friend Character operator*(const Character& x, const Character& y) {
    Character out;
    if (x.is_zero() || y.is_zero()) return out;
    int xa0 = 1 << 30, xa1 = -(1 << 30), xb0 = 1 << 30, xb1 = -(1 << 30);
    int ya0 = 1 << 30, ya1 = -(1 << 30), yb0 = 1 << 30, yb1 = -(1 << 30);
    for (auto& [w, c] : x.coeffs_) {
      xa0 = std::min(xa0, w.a); xa1 = std::max(xa1, w.a);
      xb0 = std::min(xb0, w.b); xb1 = std::max(xb1, w.b);
    }
    for (auto& [w, c] : y.coeffs_) {
      ya0 = std::min(ya0, w.a); ya1 = std::max(ya1, w.a);
      yb0 = std::min(yb0, w.b); yb1 = std::max(yb1, w.b);
    }
    const int a0 = xa0 + ya0, b0 = xb0 + yb0;
    const int na = xa1 + ya1 - a0 + 1, nb = xb1 + yb1 - b0 + 1;
    std::vector<long long> grid(static_cast<size_t>(na) * nb, 0);
    for (auto& [wx, cx] : x.coeffs_)
      for (auto& [wy, cy] : y.coeffs_) {
        const int ia = wx.a + wy.a - a0, ib = wx.b + wy.b - b0;
        grid[static_cast<size_t>(ia) * nb + ib] += cx * cy;
      }
    for (int ia = 0; ia < na; ++ia)
      for (int ib = 0; ib < nb; ++ib) {
        long long c = grid[static_cast<size_t>(ia) * nb + ib];
        if (c != 0) out.coeffs_.emplace(Weight{a0 + ia, b0 + ib}, c);
      }
    return out;
  }

  // coeff'(p^j * nu) = coeff(nu)
  Character twisted(int j, int p) const {
    int f = 1;
    for (int i = 0; i < j; ++i) f *= p;
    Character out;
    for (auto& [w, c] : coeffs_) out.coeffs_.emplace(f * w, c);
    return out;
  }

  Character flipped() const {
    Character out;
    for (auto& [w, c] : coeffs_) out.coeffs_.emplace(w.flipped(), c);
    return out;
  }

  bool weyl_invariant() const {
    for (auto& [w, c] : coeffs_)
      for (int i : {1, 2})
        if (coeff(reflect(i, w)) != c) return false;
    return true;
  }

  std::optional<Weight> max_support() const {
    std::optional<Weight> best;
    for (auto& [w, c] : coeffs_)
      if (!best || HeightOrder{}(*best, w)) best = w;
    return best;
  }

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::map<Weight, long long> coeffs_;
};

inline Character orbit_sum(Weight w) {
  Character out;
  for (Weight v : weyl_orbit(w)) out.add(v, 1);
  return out;
}

// -------------------------------------------------------------------------
// Weyl characters by Freudenthal's recursion, memoized.

namespace detail {

inline Character compute_weyl_character(Weight lam) {
  // dominant multiplicities first
  struct Entry {
    Weight mu;
    int depth;  // height of lam-mu in the root lattice
  };
  std::vector<Entry> order;
  std::map<Weight, long long> mult;
  const int bound = lam.height();
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y) {
      Weight mu = lam - x * alpha1 - y * alpha2;
      if (mu.is_dominant()) order.push_back({mu, x + y});
    }
  std::sort(order.begin(), order.end(), [](const Entry& l, const Entry& r) {
    if (l.depth != r.depth) return l.depth < r.depth;
    return l.mu < r.mu;
  });

  const int norm_top = ip3(lam + rho, lam + rho);
  const Weight roots[3] = {alpha1, alpha2, theta};
  for (const Entry& e : order) {
    if (e.depth == 0) {
      mult[e.mu] = 1;
      continue;
    }
    long long num = 0;
    for (Weight alpha : roots) {
      for (int k = 1; k <= bound + 2; ++k) {
        Weight nu = e.mu + k * alpha;
        auto it = mult.find(dominant_representative(nu));
        if (it == mult.end()) continue;
        num += it->second * ip3(nu, alpha);
      }
    }
    const long long den = norm_top - ip3(e.mu + rho, e.mu + rho);
    mult[e.mu] = 2 * num / den;
  }

  Character out;
  for (auto& [mu, m] : mult)
    if (m != 0)
      for (Weight v : weyl_orbit(mu)) out.add(v, m);
  return out;
}

}  // namespace detail

// Character of the Weyl module with highest weight lambda.
inline const Character& weyl_character(Weight lam) {
  if (!lam.is_dominant()) throw NonDominantWeight(lam);
  static std::map<Weight, Character> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(lam);
  if (it == memo.end()) it = memo.emplace(lam, detail::compute_weyl_character(lam)).first;
  return it->second;
}

constexpr long long weyl_dimension(Weight w) {
  return static_cast<long long>(w.a + 1) * (w.b + 1) * (w.a + w.b + 2) / 2;
}

// -------------------------------------------------------------------------
// Basis expansions

// Integer combination of Weyl characters (or of simple characters below),
// ordered by the greedy height order.
using BasisExpr = std::map<Weight, long long>;

inline Character realize_weyl(const BasisExpr& e) {
  Character out;
  for (auto& [w, c] : e) out += c * weyl_character(w);
  return out;
}

// Greedy highest-weight subtraction.  Unique because the chi(nu) form a
// basis of the invariants; a non-dominant maximum signals a caller bug.
inline BasisExpr into_weyl_basis(Character c) {
  BasisExpr out;
  while (!c.is_zero()) {
    Weight m = *c.max_support();
    if (!m.is_dominant())
      throw NonInvariantInput("character is not Weyl-invariant near " + to_string(m));
    long long k = c.coeff(m);
    out[m] += k;
    c -= k * weyl_character(m);
  }
  return out;
}

// -------------------------------------------------------------------------
// Simple characters via the Steinberg factorization.

namespace detail {

// Restricted table: p=2 all four restricted chi_p equal chi; p=3 likewise
// except chi_p(1,1) = chi(1,1) - chi(0,0).
inline Character restricted_simple_character(int p, Weight lam) {
  if (p == 3 && lam == Weight{1, 1})
    return weyl_character({1, 1}) - weyl_character({0, 0});
  return weyl_character(lam);
}

}  // namespace detail

inline const Character& simple_character(int p, Weight lam) {
  require_prime(p);
  if (!lam.is_dominant()) throw NonDominantWeight(lam);
  static std::map<std::pair<int, Weight>, Character> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, lam);
  auto it = memo.find(key);
  if (it == memo.end()) {
    Character out = Character::unit();
    DigitVector d = steinberg_digits(p, lam);
    for (size_t j = 0; j < d.digits.size(); ++j)
      out = out * detail::restricted_simple_character(p, d.digits[j]).twisted(static_cast<int>(j), p);
    it = memo.emplace(key, std::move(out)).first;
  }
  return it->second;
}

inline BasisExpr into_simple_basis(int p, Character c) {
  BasisExpr out;
  while (!c.is_zero()) {
    Weight m = *c.max_support();
    if (!m.is_dominant())
      throw NonInvariantInput("character is not Weyl-invariant near " + to_string(m));
    long long k = c.coeff(m);
    out[m] += k;
    c -= k * simple_character(p, m);
  }
  return out;
}

inline std::string to_string(const BasisExpr& e, const std::string& sym = "chi") {
  if (e.empty()) return "0";
  std::vector<std::pair<Weight, long long>> terms(e.begin(), e.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    return HeightOrder{}(r.first, l.first);  // highest first
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << " ";
    os << sym << to_string(w);
  }
  return os.str();
}

}  // namespace sl3
