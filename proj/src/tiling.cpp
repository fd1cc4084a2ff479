#include "torus/tiling.hpp"

#include "torus/error.hpp"

#include <sstream>

namespace torus {

Rect Rect::make(Rat x0, Rat x1, Rat y0, Rat y1) {
  if (!(x0 < x1) || !(y0 < y1)) {
    std::ostringstream msg;
    msg << "degenerate rectangle [" << x0 << ", " << x1 << "] x [" << y0 << ", " << y1 << "]";
    throw TilerError(ErrorKind::InvalidTiling, msg.str());
  }
  return {std::move(x0), std::move(x1), std::move(y0), std::move(y1)};
}

Tiling Tiling::transposed() const {
  Tiling out{basis.transposed(), {}};
  out.rects.reserve(rects.size());
  for (const Rect& r : rects) out.rects.push_back(r.transposed());
  return out;
}

Rat tiling_length(const Tiling& tiling) {
  Rat total;
  for (const Rect& r : tiling.rects) total += r.half_perimeter();
  return total;
}

Rat total_area(const Tiling& tiling) {
  Rat total;
  for (const Rect& r : tiling.rects) total += r.area();
  return total;
}

Tiling build_one_rect(const LatticeBasis& basis, RectAxis axis) {
  const AxisPeriods periods = axis_periods(basis);
  const Rat d = covolume(basis);
  if (axis == RectAxis::X) return {basis, {Rect::make(0, periods.d_x, 0, d / periods.d_x)}};
  return {basis, {Rect::make(0, d / periods.d_y, 0, periods.d_y)}};
}

Tiling build_two_rect(const LatticeBasis& basis, const Vec2& u, const Vec2& v) {
  // Accept the generators in either order.
  const bool u_first = quadrant_of(u) == Quadrant::Q1;
  Vec2 a = u_first ? u : v;
  Vec2 b = u_first ? v : u;
  if (quadrant_of(b) != Quadrant::Q2)
    throw std::invalid_argument("two-rectangle construction needs one generator with xy < 0");
  if ((a.x * a.y).is_zero())
    throw TilerError(ErrorKind::AxisAlignedGenerator,
                     "generator in the closed quadrant lies on an axis; the two-rectangle "
                     "construction does not apply");
  if (det(a, b).abs() != covolume(basis))
    throw TilerError(ErrorKind::NotABasis, "generators do not form a Z-basis of the lattice");
  if (!contains(basis, a) || !contains(basis, b))
    throw TilerError(ErrorKind::NotABasis, "generators are not lattice vectors");

  // Normalize to p, q > 0 and r < 0 < s.
  if (a.x.sign() < 0) a = -a;
  if (b.x.sign() > 0) b = -b;
  const Rat& p = a.x;
  const Rat& q = a.y;
  const Rat& r = b.x;
  const Rat& s = b.y;
  return {basis, {Rect::make(r, p + r, 0, s), Rect::make(p + r, p, 0, q)}};
}

Tiling build_two_rect(const LatticeBasis& basis, const QuadrantBasis& qb) {
  return build_two_rect(basis, qb.u1, qb.u2);
}

Tiling build_optimal(const LatticeBasis& basis) { return build_optimal(basis, min_length(basis)); }

Tiling build_optimal(const LatticeBasis& basis, const MinLengthReport& report) {
  switch (report.winner) {
    case Winner::OneRectX: return build_one_rect(basis, RectAxis::X);
    case Winner::OneRectY: return build_one_rect(basis, RectAxis::Y);
    case Winner::TwoRect: break;
  }
  // A quadrant basis with u1 on an axis is always beaten by a one-rectangle
  // tiling, so TwoRect implies pq > 0.
  const Vec2& u1 = report.witness.u1;
  if ((u1.x * u1.y).is_zero())
    throw std::logic_error("two_rect winner with an axis-aligned quadrant generator");
  return build_two_rect(basis, report.witness);
}

}  // namespace torus
