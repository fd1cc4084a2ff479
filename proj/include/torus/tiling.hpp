#pragma once

#include "torus/lattice.hpp"

#include <vector>

namespace torus {

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1] in the plane.
struct Rect {
  Rat x0, x1, y0, y1;

  /// Throws InvalidTiling unless x0 < x1 and y0 < y1.
  static Rect make(Rat x0, Rat x1, Rat y0, Rat y1);

  Rat width() const { return x1 - x0; }
  Rat height() const { return y1 - y0; }
  Rat half_perimeter() const { return width() + height(); }
  Rat area() const { return width() * height(); }

  /// Swaps the roles of x and y.
  Rect transposed() const { return {y0, y1, x0, x1}; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// A lattice together with planar rectangles whose images should tile the
/// torus. Whether they actually do is decided by verify_tiling.
struct Tiling {
  LatticeBasis basis;
  std::vector<Rect> rects;

  Tiling transposed() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

enum class RectAxis { X, Y };

Rat tiling_length(const Tiling& tiling);
Rat total_area(const Tiling& tiling);

/// Single rectangle [0, d_x] x [0, covolume/d_x] (axis X) or
/// [0, covolume/d_y] x [0, d_y] (axis Y).
Tiling build_one_rect(const LatticeBasis& basis, RectAxis axis);

/// Two-rectangle tiling generated by a Z-basis {u, v} of the lattice with
/// u strictly inside the first/third quadrant and v in the open second/fourth
/// quadrant (either order is accepted). Throws AxisAlignedGenerator when the
/// Q1 generator lies on an axis and NotABasis when the pair does not
/// generate the lattice.
Tiling build_two_rect(const LatticeBasis& basis, const Vec2& u, const Vec2& v);
Tiling build_two_rect(const LatticeBasis& basis, const QuadrantBasis& qb);

/// Optimal tiling following the winner reported by min_length.
Tiling build_optimal(const LatticeBasis& basis);
Tiling build_optimal(const LatticeBasis& basis, const MinLengthReport& report);

}  // namespace torus
