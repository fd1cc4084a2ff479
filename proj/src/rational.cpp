#include "torus/rational.hpp"

#include "torus/error.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace torus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::AxisAlignedGenerator: return "AxisAlignedGenerator";
    case ErrorKind::InvalidTiling: return "InvalidTiling";
    case ErrorKind::CycleExists: return "CycleExists";
    case ErrorKind::ReductionStepInvalid: return "ReductionStepInvalid";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw TilerError(ErrorKind::Parse, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw TilerError(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0)
    throw TilerError(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

mpz_class Rat::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

mpz_class Rat::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p() || z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    throw TilerError(ErrorKind::Overflow, "integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a.is_zero() && b.is_zero()) throw TilerError(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  // Over the common denominator d1*d2 both values become integers; their
  // integer gcd scaled back is the rational gcd.
  const mpz_class d1 = a.den();
  const mpz_class d2 = b.den();
  const mpz_class n1 = a.num() * d2;
  const mpz_class n2 = b.num() * d1;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
  return Rat(g, d1 * d2);
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

Rat l1_norm(const Vec2& v) { return v.x.abs() + v.y.abs(); }

Quadrant quadrant_of(const Vec2& v) {
  return v.x.sign() * v.y.sign() >= 0 ? Quadrant::Q1 : Quadrant::Q2;
}

Rat det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace torus
