#pragma once

#include "torus/tiling.hpp"

#include <string>

namespace torus::svg {

/// Maps plane coordinates to pixels. Everything stays rational until a
/// coordinate is written out, rounded half-up to three decimals.
class Viewport {
public:
  /// Fits [lo, hi] plus a 10% margin into `width_px` pixels.
  Viewport(const Vec2& lo, const Vec2& hi, int width_px);

  Rat px(const Rat& x) const { return (x - left_) * scale_; }
  Rat py(const Rat& y) const { return (top_ - y) * scale_; }
  Rat length(const Rat& d) const { return d * scale_; }

  const Rat& width() const { return width_; }
  const Rat& height() const { return height_; }
  /// Plane-coordinate bounds of the visible area.
  Vec2 lower() const;
  Vec2 upper() const;

private:
  Rat left_, top_, scale_, width_, height_;
};

/// Three-decimal, half-up fixed point rendering of a rational.
std::string fixed3(const Rat& value);

/// Draws the tiling's rectangles in their planar coordinates, the basis
/// parallelogram, both basis vectors as arrows from the origin and the
/// lattice points in view. Identical inputs give byte-identical output.
std::string render(const Tiling& tiling, int width_px);

}  // namespace torus::svg
