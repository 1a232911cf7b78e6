#pragma once

// Weight-lattice arithmetic for SL3 in the fundamental-weight basis.
//
// A weight (a,b) abbreviates a*w1 + b*w2 where w1, w2 are the fundamental
// weights.  Simple-root coordinates are derived, never stored:
// a1 = (2,-1), a2 = (-1,2), rho = (1,1).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3 {

struct Weight {
  int a = 0;
  int b = 0;

  friend constexpr bool operator==(const Weight&, const Weight&) = default;
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  constexpr bool is_dominant() const { return a >= 0 && b >= 0; }
  constexpr bool is_restricted(int p) const {
    return a >= 0 && b >= 0 && a <= p - 1 && b <= p - 1;
  }
  // the symmetry lambda -> -w0(lambda), i.e. (a,b) -> (b,a)
  constexpr Weight flipped() const { return Weight{b, a}; }
  constexpr int height() const { return a + b; }
};

constexpr Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
constexpr Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
constexpr Weight operator*(int k, Weight x) { return {k * x.a, k * x.b}; }

inline constexpr Weight rho{1, 1};
inline constexpr Weight alpha1{2, -1};
inline constexpr Weight alpha2{-1, 2};
inline constexpr Weight theta{1, 1};  // highest root a1+a2

inline std::string to_string(Weight w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

// 3x the W-invariant form normalized so (alpha,alpha)=2; kept integral.
constexpr int ip3(Weight x, Weight y) {
  return 2 * x.a * y.a + x.a * y.b + x.b * y.a + 2 * x.b * y.b;
}

// Greedy expansions pick maxima in this order; any linear extension of
// dominance works, this one is fixed for determinism.
struct HeightOrder {
  constexpr bool operator()(Weight x, Weight y) const {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.a < y.a;
  }
};

struct NonDominantWeight : std::invalid_argument {
  explicit NonDominantWeight(Weight w)
      : std::invalid_argument("weight " + to_string(w) + " is not dominant") {}
};

struct UnsupportedPrime : std::invalid_argument {
  explicit UnsupportedPrime(int p)
      : std::invalid_argument("unsupported prime p=" + std::to_string(p)) {}
};

// Simple reflections: s1(a,b) = (-a,a+b), s2(a,b) = (a+b,-b).
inline Weight reflect(int i, Weight w) {
  if (i == 1) return {-w.a, w.a + w.b};
  if (i == 2) return {w.a + w.b, -w.b};
  throw std::invalid_argument("simple-root index must be 1 or 2");
}

inline std::vector<Weight> weyl_orbit(Weight w) {
  std::set<Weight> seen{w};
  std::vector<Weight> todo{w};
  while (!todo.empty()) {
    Weight x = todo.back();
    todo.pop_back();
    for (int i : {1, 2}) {
      Weight y = reflect(i, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline Weight dominant_representative(Weight w) {
  while (!w.is_dominant()) {
    if (w.a < 0)
      w = reflect(1, w);
    else
      w = reflect(2, w);
  }
  return w;
}

// Reflects mu+rho to the dominant chamber under the dot action.
// Returns {0,_} when mu+rho lies on a wall, else {sign, nu} with
// w(mu+rho) = nu+rho.
inline std::pair<int, Weight> dot_dominant(Weight mu) {
  Weight w = mu + rho;
  int sign = 1;
  while (true) {
    if (w.a == 0 || w.b == 0) return {0, Weight{}};
    if (w.a < 0) {
      w = reflect(1, w);
      sign = -sign;
    } else if (w.b < 0) {
      w = reflect(2, w);
      sign = -sign;
    } else {
      return {sign, w - rho};
    }
  }
}

// -------------------------------------------------------------------------
// Digit expansions

struct DigitVector {
  std::vector<Weight> digits;
  int base = 0;

  Weight reconstruct() const {
    Weight acc{0, 0};
    int pw = 1;
    for (const Weight& d : digits) {
      acc = acc + pw * d;
      pw *= base;
    }
    return acc;
  }
};

inline void require_prime(int p) {
  if (p != 2 && p != 3) throw UnsupportedPrime(p);
}

// Independent base-p digits of a and b, paired positionally; trailing (0,0)
// digits trimmed, so (0,0) yields the empty vector.
inline DigitVector steinberg_digits(int p, Weight lambda) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  DigitVector out;
  out.base = p;
  int a = lambda.a, b = lambda.b;
  while (a > 0 || b > 0) {
    out.digits.push_back({a % p, b % p});
    a /= p;
    b /= p;
  }
  return out;
}

// Every digit before the last lies in (p-1)rho + X1; the recursion stops at
// the first digit with a coordinate < p-1.  Trailing (0,0) digits trimmed.
inline DigitVector tilting_digits(int p, Weight lambda) {
  require_prime(p);
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  DigitVector out;
  out.base = p;
  Weight cur = lambda;
  while (cur.a >= p - 1 && cur.b >= p - 1) {
    int ra = (cur.a - (p - 1)) % p;
    int rb = (cur.b - (p - 1)) % p;
    out.digits.push_back({p - 1 + ra, p - 1 + rb});
    cur = {(cur.a - (p - 1) - ra) / p, (cur.b - (p - 1) - rb) / p};
  }
  out.digits.push_back(cur);
  while (!out.digits.empty() && out.digits.back() == Weight{0, 0})
    out.digits.pop_back();
  return out;
}

constexpr bool in_steinberg_box(int p, Weight w) {
  return w.a >= p - 1 && w.a <= 2 * p - 2 && w.b >= p - 1 && w.b <= 2 * p - 2;
}

constexpr bool is_minuscule(Weight w) {
  return w == Weight{0, 0} || w == Weight{1, 0} || w == Weight{0, 1};
}

// -------------------------------------------------------------------------
// Linkage (affine Weyl group dot action modulo p times the root lattice).
// Root-lattice membership in w-coordinates: (x,y) in ZPhi iff x = y mod 3.

inline bool in_root_lattice(Weight w) { return (w.a - w.b) % 3 == 0; }

inline bool dot_linked(int p, Weight lambda, Weight mu) {
  if (!lambda.is_dominant()) throw NonDominantWeight(lambda);
  if (!mu.is_dominant()) throw NonDominantWeight(mu);
  Weight target = mu + rho;
  for (Weight w : weyl_orbit(lambda + rho)) {
    Weight d = target - w;
    if (d.a % p == 0 && d.b % p == 0 &&
        in_root_lattice({d.a / p, d.b / p}))
      return true;
  }
  return false;
}

inline std::vector<std::vector<Weight>> linkage_classes(
    int p, const std::vector<Weight>& s) {
  std::vector<std::vector<Weight>> classes;
  for (Weight w : s) {
    bool placed = false;
    for (auto& cls : classes) {
      if (dot_linked(p, cls.front(), w)) {
        cls.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({w});
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  return classes;
}

}  // namespace sl3
