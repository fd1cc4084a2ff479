#include "torus/lattice.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torus {

LatticeBasis::LatticeBasis(Vec2 u, Vec2 v)
    : u_(std::move(u)), v_(std::move(v)), det_(det(u_, v_)) {
  if (det_.is_zero())
    throw TilerError(ErrorKind::SingularBasis, "basis vectors are linearly dependent (det = 0)");
}

std::pair<Rat, Rat> LatticeBasis::coordinates(const Vec2& x) const {
  // Cramer's rule on [u v] z = x.
  return {(x.x * v_.y - x.y * v_.x) / det_, (u_.x * x.y - u_.y * x.x) / det_};
}

Vec2 LatticeBasis::combine(const Rat& z1, const Rat& z2) const {
  return {z1 * u_.x + z2 * v_.x, z1 * u_.y + z2 * v_.y};
}

Rat LatticeBasis::inverse_l1_norm() const {
  const Rat col1 = v_.y.abs() + u_.y.abs();
  const Rat col2 = v_.x.abs() + u_.x.abs();
  return max(col1, col2) / det_.abs();
}

LatticeBasis LatticeBasis::transposed() const {
  return LatticeBasis(Vec2{u_.y, u_.x}, Vec2{v_.y, v_.x});
}

bool LatticeBasis::generates_same_lattice(const LatticeBasis& other) const {
  return contains(*this, other.u()) && contains(*this, other.v()) && contains(other, u_) &&
         contains(other, v_);
}

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::OneRectX: return "one_rect_x";
    case Winner::OneRectY: return "one_rect_y";
    case Winner::TwoRect: return "two_rect";
  }
  return "unknown";
}

Rat covolume(const LatticeBasis& basis) { return basis.determinant().abs(); }

bool contains(const LatticeBasis& basis, const Vec2& x) {
  const auto [z1, z2] = basis.coordinates(x);
  return z1.is_integer() && z2.is_integer();
}

namespace {

std::int64_t enumeration_bound(const LatticeBasis& basis, const Rat& radius) {
  if (radius.sign() < 0) throw std::invalid_argument("enumeration radius must be non-negative");
  return to_int64((basis.inverse_l1_norm() * radius).floor());
}

// Lattice points of one z1 row with |z2| <= n - |z1| and norm within radius.
void scan_row(const LatticeBasis& basis, const Rat& radius, std::int64_t n, std::int64_t z1,
              std::vector<Vec2>& out) {
  const std::int64_t rem = n - (z1 < 0 ? -z1 : z1);
  Vec2 x = basis.combine(Rat(z1), Rat(-rem));
  for (std::int64_t z2 = -rem; z2 <= rem; ++z2) {
    if (l1_norm(x) <= radius) out.push_back(x);
    x += basis.v();
  }
}

}  // namespace

std::vector<Vec2> enumerate_lattice_points_serial(const LatticeBasis& basis, const Rat& radius) {
  const std::int64_t n = enumeration_bound(basis, radius);
  std::vector<Vec2> out;
  for (std::int64_t z1 = -n; z1 <= n; ++z1) scan_row(basis, radius, n, z1, out);
  return out;
}

std::vector<Vec2> enumerate_lattice_points(const LatticeBasis& basis, const Rat& radius) {
  const std::int64_t n = enumeration_bound(basis, radius);
  const std::int64_t rows = 2 * n + 1;
  std::vector<std::vector<Vec2>> per_row(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < rows; ++i)
    scan_row(basis, radius, n, i - n, per_row[static_cast<std::size_t>(i)]);

  std::size_t total = 0;
  for (const auto& row : per_row) total += row.size();
  std::vector<Vec2> out;
  out.reserve(total);
  for (auto& row : per_row)
    std::move(row.begin(), row.end(), std::back_inserter(out));
  return out;
}

std::vector<Vec2> lattice_points_in_open_box(const LatticeBasis& basis, const Vec2& lo, const Vec2& hi) {
  std::vector<Vec2> out;
  if (!(lo.x < hi.x) || !(lo.y < hi.y)) return out;
  // Integer hull of the box's preimage parallelogram.
  const Vec2 corners[4] = {lo, {hi.x, lo.y}, {lo.x, hi.y}, hi};
  mpz_class z1_lo, z1_hi, z2_lo, z2_hi;
  for (int i = 0; i < 4; ++i) {
    const auto [a, b] = basis.coordinates(corners[i]);
    if (i == 0 || a.floor() < z1_lo) z1_lo = a.floor();
    if (i == 0 || a.ceil() > z1_hi) z1_hi = a.ceil();
    if (i == 0 || b.floor() < z2_lo) z2_lo = b.floor();
    if (i == 0 || b.ceil() > z2_hi) z2_hi = b.ceil();
  }
  const std::int64_t a0 = to_int64(z1_lo), a1 = to_int64(z1_hi);
  const std::int64_t b0 = to_int64(z2_lo), b1 = to_int64(z2_hi);
  for (std::int64_t z1 = a0; z1 <= a1; ++z1) {
    Vec2 x = basis.combine(Rat(z1), Rat(b0));
    for (std::int64_t z2 = b0; z2 <= b1; ++z2) {
      if (lo.x < x.x && x.x < hi.x && lo.y < x.y && x.y < hi.y) out.push_back(x);
      x += basis.v();
    }
  }
  return out;
}

Vec2 canonical_q1(const Vec2& x) {
  if (x.x.sign() < 0 || (x.x.is_zero() && x.y.sign() < 0)) return -x;
  return x;
}

Vec2 canonical_q2(const Vec2& x) { return x.x.sign() > 0 ? -x : x; }

namespace {

// Among equal-norm candidates prefer the smallest y, then the smallest x.
bool tie_less(const Vec2& a, const Vec2& b) {
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

struct QuadrantBest {
  std::optional<Rat> norm;
  Vec2 pick;

  void offer(const Vec2& candidate, const Rat& n) {
    if (!norm || n < *norm) {
      norm = n;
      pick = candidate;
    } else if (n == *norm && tie_less(candidate, pick)) {
      pick = candidate;
    }
  }
};

}  // namespace

QuadrantBasis quadrant_basis(const LatticeBasis& basis) {
  // Walk integer shells |z1| + |z2| = k outward. After shell k every lattice
  // point x with |x|_1 * |B^-1|_1 <= k has been seen, so both minima (and all
  // of their ties) are certified once best * |B^-1|_1 <= k.
  const Rat inv = basis.inverse_l1_norm();
  QuadrantBest q1, q2;
  auto visit = [&](std::int64_t z1, std::int64_t z2) {
    const Vec2 x = basis.combine(Rat(z1), Rat(z2));
    const Rat n = l1_norm(x);
    if (quadrant_of(x) == Quadrant::Q1)
      q1.offer(canonical_q1(x), n);
    else
      q2.offer(canonical_q2(x), n);
  };
  for (std::int64_t k = 1;; ++k) {
    for (std::int64_t z1 = -k; z1 <= k; ++z1) {
      const std::int64_t rem = k - (z1 < 0 ? -z1 : z1);
      visit(z1, rem);
      if (rem != 0) visit(z1, -rem);
    }
    if (q1.norm && q2.norm && *q1.norm * inv <= Rat(k) && *q2.norm * inv <= Rat(k)) break;
  }
  return {q1.pick, q2.pick};
}

Vec2 y_step_vector(const LatticeBasis& basis) {
  const Rat& q = basis.u().y;
  const Rat& s = basis.v().y;
  // a*q + b*s = g / (den q * den s) = rat_gcd(q, s)
  const mpz_class nq = q.num() * s.den();
  const mpz_class ns = s.num() * q.den();
  mpz_class g, a, b;
  mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), nq.get_mpz_t(), ns.get_mpz_t());
  return basis.combine(Rat(a), Rat(b));
}

Vec2 x_step_vector(const LatticeBasis& basis) {
  const Vec2 t = y_step_vector(basis.transposed());
  return {t.y, t.x};
}

AxisPeriods axis_periods(const LatticeBasis& basis) {
  const Rat d = covolume(basis);
  const Rat gy = rat_gcd(basis.u().y, basis.v().y);
  const Rat gx = rat_gcd(basis.u().x, basis.v().x);
  AxisPeriods out;
  out.d_x = d / gy;
  out.m_x = out.d_x + gy;
  out.d_y = d / gx;
  out.m_y = out.d_y + gx;
  return out;
}

MinLengthReport min_length(const LatticeBasis& basis) {
  const QuadrantBasis qb = quadrant_basis(basis);
  const AxisPeriods periods = axis_periods(basis);
  MinLengthReport report{
      .covolume = covolume(basis),
      .d_x = periods.d_x,
      .d_y = periods.d_y,
      .quadrant_sum = l1_norm(qb.u1) + l1_norm(qb.u2),
      .m_x = AxisLength(periods.m_x),
      .m_y = AxisLength(periods.m_y),
      .min_length = {},
      .winner = Winner::TwoRect,
      .witness = qb,
  };
  // One-rectangle tilings win ties, x before y.
  if (!(report.quadrant_sum < report.m_x) && !(report.m_y < report.m_x)) {
    report.winner = Winner::OneRectX;
    report.min_length = report.m_x.value();
  } else if (!(report.quadrant_sum < report.m_y)) {
    report.winner = Winner::OneRectY;
    report.min_length = report.m_y.value();
  } else {
    report.min_length = report.quadrant_sum;
  }
  return report;
}

}  // namespace torus
