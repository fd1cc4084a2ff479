#pragma once

#include "torus/rational.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace torus {

/// Ordered basis {u, v} of a planar lattice, u = (p, q), v = (r, s).
/// Construction rejects singular pairs.
class LatticeBasis {
public:
  LatticeBasis(Vec2 u, Vec2 v);
  LatticeBasis(Rat p, Rat q, Rat r, Rat s) : LatticeBasis(Vec2{std::move(p), std::move(q)}, Vec2{std::move(r), std::move(s)}) {}

  const Vec2& u() const { return u_; }
  const Vec2& v() const { return v_; }

  /// p*s - q*r, nonzero.
  const Rat& determinant() const { return det_; }

  /// Rational (z1, z2) with x = z1*u + z2*v.
  std::pair<Rat, Rat> coordinates(const Vec2& x) const;
  Vec2 combine(const Rat& z1, const Rat& z2) const;

  /// Operator 1-norm of the inverse basis matrix:
  /// max(|s| + |q|, |r| + |p|) / |ps - qr|.
  Rat inverse_l1_norm() const;

  /// Reflection across the line y = x applied to both vectors.
  LatticeBasis transposed() const;

  bool generates_same_lattice(const LatticeBasis& other) const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

private:
  Vec2 u_;
  Vec2 v_;
  Rat det_;
};

/// u1: shortest nonzero lattice vector with xy >= 0; u2: shortest with xy < 0.
/// Signs are canonical: u1.x >= 0 (u1.y > 0 when u1.x = 0), u2.x < 0 < u2.y.
struct QuadrantBasis {
  Vec2 u1;
  Vec2 u2;

  friend bool operator==(const QuadrantBasis&, const QuadrantBasis&) = default;
};

/// One-rectangle tiling length along an axis. Rational lattices always have
/// both axis periods, so the unbounded state only arises for API users that
/// build it explicitly.
class AxisLength {
public:
  AxisLength(Rat value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static AxisLength infinite() { return AxisLength(); }

  bool is_finite() const { return value_.has_value(); }
  const Rat& value() const { return value_.value(); }
  std::string str() const { return value_ ? value_->str() : std::string("inf"); }

  friend bool operator==(const AxisLength&, const AxisLength&) = default;
  friend bool operator<(const AxisLength& a, const AxisLength& b) {
    if (!a.is_finite()) return false;
    if (!b.is_finite()) return true;
    return a.value() < b.value();
  }

private:
  AxisLength() = default;
  std::optional<Rat> value_;
};

struct AxisPeriods {
  Rat d_x;  // least positive a with (a, 0) in the lattice
  Rat d_y;  // least positive b with (0, b) in the lattice
  Rat m_x;  // d_x + covolume / d_x
  Rat m_y;  // d_y + covolume / d_y
};

enum class Winner { OneRectX, OneRectY, TwoRect };

std::string_view to_string(Winner w);

struct MinLengthReport {
  Rat covolume;
  Rat d_x;
  Rat d_y;
  Rat quadrant_sum;
  AxisLength m_x;
  AxisLength m_y;
  Rat min_length;
  Winner winner;
  QuadrantBasis witness;
};

Rat covolume(const LatticeBasis& basis);

bool contains(const LatticeBasis& basis, const Vec2& x);

/// All lattice points with l1 norm <= radius, each once, ordered by their
/// integer coordinates (z1, z2) lexicographically. The OpenMP kernel splits
/// the z1 rows across threads; the serial version is the reference.
std::vector<Vec2> enumerate_lattice_points(const LatticeBasis& basis, const Rat& radius);
std::vector<Vec2> enumerate_lattice_points_serial(const LatticeBasis& basis, const Rat& radius);

/// Lattice points strictly inside the open box (lo.x, hi.x) x (lo.y, hi.y).
std::vector<Vec2> lattice_points_in_open_box(const LatticeBasis& basis, const Vec2& lo, const Vec2& hi);

/// Sign representative of +-x used by the quadrant basis tie-break.
Vec2 canonical_q1(const Vec2& x);
Vec2 canonical_q2(const Vec2& x);

QuadrantBasis quadrant_basis(const LatticeBasis& basis);

AxisPeriods axis_periods(const LatticeBasis& basis);

/// Lattice vector whose y coordinate is the y-spacing rat_gcd(q, s) of the
/// lattice, and the analogous vector for the x coordinate.
Vec2 y_step_vector(const LatticeBasis& basis);
Vec2 x_step_vector(const LatticeBasis& basis);

MinLengthReport min_length(const LatticeBasis& basis);

}  // namespace torus
