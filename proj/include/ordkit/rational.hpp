#ifndef ORDKIT_RATIONAL_HPP
#define ORDKIT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ordkit {

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Exact rational number backed by int64, kept in reduced form with den > 0.
    Intermediate products go through __int128; anything that would leave the
    int64 range throws OverflowError rather than silently wrapping. */
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (den == 0) den = 1;  // num == 0 case after gcd(0,0) guard
  }

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("Rat: int64 overflow");
    return static_cast<std::int64_t>(v);
  }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return make((__int128)x.num * y.den + (__int128)y.num * x.den, (__int128)x.den * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return make((__int128)x.num * y.den - (__int128)y.num * x.den, (__int128)x.den * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return make((__int128)x.num * y.num, (__int128)x.den * y.den);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw std::invalid_argument("Rat: division by zero");
    return make((__int128)x.num * y.den, (__int128)x.den * y.num);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
  }

  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return (__int128)x.num * y.den < (__int128)y.num * x.den;
  }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& x) {
    return os << x.num << '/' << x.den;
  }

  /// Canonical "p/q" form; round trips through parse().
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  /// Accepts "p/q" or a bare integer "p".
  static Rat parse(const std::string& s);
};

inline Rat rat_min(const Rat& x, const Rat& y) { return x <= y ? x : y; }
inline Rat rat_max(const Rat& x, const Rat& y) { return x >= y ? x : y; }
inline Rat rat_abs(const Rat& x) { return x.num < 0 ? -x : x; }

inline bool in_unit(const Rat& x) { return Rat(0) <= x && x <= Rat(1); }

/// Truncated addition on [0,1]: r ∔ s = min(r + s, 1).
inline Rat dot_plus(const Rat& r, const Rat& s) { return rat_min(r + s, Rat(1)); }

/// Truncated subtraction on [0,1]: r ∸ s = max(r − s, 0).
inline Rat dot_minus(const Rat& r, const Rat& s) { return rat_max(r - s, Rat(0)); }

}  // namespace ordkit

#endif
