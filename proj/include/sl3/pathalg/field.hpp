#pragma once

// Exact coefficient fields for the quiver workbench: rationals with
// overflow-checked 64-bit storage, and small prime fields.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sl3::pathalg {

namespace detail {
inline long long checked_cast(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}
}  // namespace detail

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    __int128 n = static_cast<__int128>(x.num_) * y.den_ +
                 static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return make(n, d);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    __int128 n = static_cast<__int128>(x.num_) * y.den_ -
                 static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return make(n, d);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make(static_cast<__int128>(x.num_) * y.num_,
                static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("division by zero");
    return make(static_cast<__int128>(x.num_) * y.den_,
                static_cast<__int128>(x.den_) * y.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static const char* field_name() { return "Q"; }

 private:
  long long num_ = 0;
  long long den_ = 1;

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    Rational r;
    r.num_ = detail::checked_cast(n / a);
    r.den_ = detail::checked_cast(d / a);
    return r;
  }

  void normalize() { *this = make(num_, den_); }
};

template <int P>
class GF {
  static_assert(P >= 2);

 public:
  GF() = default;
  GF(long long v) : v_(static_cast<int>(((v % P) + P) % P)) {}

  int value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend GF operator+(GF x, GF y) { return GF((x.v_ + y.v_) % P); }
  friend GF operator-(GF x, GF y) { return GF((x.v_ - y.v_ + P) % P); }
  friend GF operator*(GF x, GF y) { return GF(static_cast<long long>(x.v_) * y.v_ % P); }
  friend GF operator/(GF x, GF y) {
    if (y.v_ == 0) throw std::domain_error("division by zero");
    return x * y.inverse();
  }
  GF operator-() const { return GF(P - v_); }
  GF& operator+=(GF y) { return *this = *this + y; }
  GF& operator-=(GF y) { return *this = *this - y; }
  GF& operator*=(GF y) { return *this = *this * y; }
  GF& operator/=(GF y) { return *this = *this / y; }

  friend bool operator==(const GF&, const GF&) = default;

  GF inverse() const {
    // P is prime and small; Fermat
    GF acc(1), base(*this);
    int e = P - 2;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    if ((acc * *this).v_ != 1) throw std::domain_error("not invertible");
    return acc;
  }

  std::string str() const { return std::to_string(v_); }

  static std::string field_name() { return "F" + std::to_string(P); }

 private:
  int v_ = 0;
};

}  // namespace sl3::pathalg
