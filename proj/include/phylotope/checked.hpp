#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace phylotope {

using Int = std::int64_t;
using Coords = std::vector<Int>;

// Thrown when an exact integer computation leaves the representable range.
// All kernel arithmetic goes through the checked helpers below, so overflow
// surfaces as an exception instead of a silent wrap.
class overflow_error : public std::runtime_error {
public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in mul");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// gcd with the usual convention gcd(0, 0) = 0, result non-negative.
inline Int gcd_nonneg(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

inline Int vector_content(const Coords& v) {
  Int g = 0;
  for (Int x : v) {
    g = gcd_nonneg(g, x);
    if (g == 1) break;
  }
  return g;
}

// Divides by the content so the vector is primitive; zero vectors pass through.
inline void make_primitive(Coords& v) {
  Int g = vector_content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline Int dot(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline Coords operator+(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline Coords operator-(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline Coords operator*(Int c, const Coords& a) {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
  return r;
}

// Exact rational on 128-bit components. Only the small dense solves use it
// (simplicial cone inversion, HNF back-substitution), so the wide type costs
// nothing measurable and removes any realistic overflow risk there.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;  // > 0

  Rational() = default;
  Rational(Int n) : num(n), den(1) {}
  Rational(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Clears denominators and reduces to a primitive integer vector pointing the
// same way. Throws if a component does not fit in 64 bits.
inline Coords primitive_integer(const std::vector<Rational>& v) {
  __int128 l = 1;
  for (const auto& r : v) l = l / Rational::gcd128(l, r.den) * r.den;
  std::vector<__int128> scaled(v.size());
  __int128 g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i].num * (l / v[i].den);
    g = Rational::gcd128(g, scaled[i]);
  }
  Coords out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    __int128 x = g > 1 ? scaled[i] / g : scaled[i];
    if (x > INT64_MAX || x < INT64_MIN) throw overflow_error("primitive_integer: component out of range");
    out[i] = static_cast<Int>(x);
  }
  return out;
}

}  // namespace phylotope
