#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace torus {

/// Exact rational scalar. Always held in canonical form: positive
/// denominator, numerator and denominator coprime.
class Rat {
public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& value) : q_(value) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class value);

  /// Parses "3", "-4", "+7/2". The denominator, when present, must be
  /// positive; the value is canonicalized ("6/4" reads as 3/2).
  static Rat parse(std::string_view text);

  std::string str() const { return q_.get_str(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer not exceeding the value.
  mpz_class floor() const;
  mpz_class ceil() const;

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Converts an integer-valued GMP number to int64, throwing Overflow when it
/// does not fit. Used where enumeration bounds become loop counters.
std::int64_t to_int64(const mpz_class& z);

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Largest positive g with a, b both in gZ. rat_gcd(a, 0) = |a|.
/// Throws BothZero when a = b = 0.
Rat rat_gcd(const Rat& a, const Rat& b);

struct Vec2 {
  Rat x;
  Rat y;

  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Rat& k, const Vec2& a) { return {k * a.x, k * a.y}; }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  // lexicographic on (x, y)
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

/// Closed set xy >= 0 (axes included) versus the open set xy < 0.
enum class Quadrant { Q1, Q2 };

Rat l1_norm(const Vec2& v);
Quadrant quadrant_of(const Vec2& v);

/// Determinant of the 2x2 matrix with columns a, b.
Rat det(const Vec2& a, const Vec2& b);

}  // namespace torus
