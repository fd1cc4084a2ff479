#pragma once

#include "torus/tiling.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torus {

/// Image of a planar point on the torus, represented by B * frac(B^-1 x).
struct TorusPoint {
  Vec2 rep;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

TorusPoint canonicalize(const LatticeBasis& basis, const Vec2& x);

// ---------------------------------------------------------------------------
// Verification

enum class ViolationKind { Injectivity, Overlap, Coverage };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> rects;     // offending rectangle indices
  std::optional<Vec2> lattice_vector; // witness translation, if any
  std::string detail;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks the three tiling conditions exactly:
///  - no nonzero lattice vector fits in a rectangle's open difference box,
///  - no translate of one open rectangle meets another,
///  - the rectangle areas sum to the covolume.
/// The per-rectangle and per-pair checks run as an OpenMP loop; the serial
/// version runs the same checks in order and is kept as the reference.
VerificationReport verify_tiling(const Tiling& tiling);
VerificationReport verify_tiling_serial(const Tiling& tiling);

// ---------------------------------------------------------------------------
// Skeleton graph

enum class Axis { Horizontal, Vertical };
enum class Side { Bottom, Top, Left, Right };

std::string_view to_string(Axis axis);
std::string_view to_string(Side side);

/// Coordinates on the closed axis-parallel geodesics of the torus. For the
/// horizontal chart every horizontal line is a circle of circumference d_x;
/// lines are identified by their y offset modulo the lattice's y spacing and
/// points on a line by their x position modulo d_x. The vertical chart is the
/// mirror image.
class LineChart {
public:
  LineChart(const LatticeBasis& basis, Axis axis);

  Axis axis() const { return axis_; }
  const Rat& spacing() const { return spacing_; }
  const Rat& circumference() const { return circumference_; }

  Rat line_of(const Vec2& x) const;
  Rat position_of(const Vec2& x) const;
  Vec2 point(const Rat& line, const Rat& position) const;

private:
  // (along, across) coordinates for this chart's axis.
  std::pair<Rat, Rat> split(const Vec2& x) const;

  Axis axis_;
  Rat spacing_;
  Rat circumference_;
  Vec2 lift_;  // lattice vector whose across-coordinate equals spacing_
};

struct SideRef {
  std::size_t rect;
  Side side;

  friend bool operator==(const SideRef&, const SideRef&) = default;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

/// Atomic skeleton edge: an arc of one torus line between consecutive
/// vertices, together with the two rectangle sides that cover it.
struct SkeletonEdge {
  Axis axis;
  Rat line;
  Rat start;
  Rat length;
  TorusPoint origin;
  TorusPoint target;
  std::vector<SideRef> sides;
};

struct Skeleton {
  LatticeBasis basis;
  std::vector<TorusPoint> vertices;
  std::vector<SkeletonEdge> edges;  // horizontal first, then by (line, start)

  Rat total_length() const;
};

/// Throws InvalidTiling when the tiling fails verification.
Skeleton build_skeleton(const Tiling& tiling);

/// A closed cycle or a maximal path of single-orientation edges.
struct AxisRun {
  Axis axis;
  Rat line;
  Rat start;
  Rat length;
  std::vector<std::size_t> edges;  // indices into Skeleton::edges, in order
};

struct AxisPathDecomposition {
  std::vector<AxisRun> cycles_h;
  std::vector<AxisRun> cycles_v;
  std::vector<AxisRun> paths_h;  // sorted by (line, start)
  std::vector<AxisRun> paths_v;

  bool has_cycle() const { return !cycles_h.empty() || !cycles_v.empty(); }
};

AxisPathDecomposition decompose_axis_paths(const Skeleton& skeleton);

// ---------------------------------------------------------------------------
// Path reduction

struct ReductionStep {
  Axis axis = Axis::Horizontal;
  Rat line;              // anchor of the reduced maximal path
  Rat start;
  Rat path_length;
  bool mirrored = false; // path moved up (right) instead of down (left)
  std::vector<std::size_t> s1;  // both opposite sides on the path
  std::vector<std::size_t> s2;  // only the top (right) side on the path
  std::vector<std::size_t> s3;  // only the bottom (left) side on the path
  Rat shift;
  std::vector<std::size_t> eliminated;
  Rat length_before;
  Rat length_after;
  Rat length_bound;      // before - width_j - shift * (|S2| - |S3|)
};

struct ReductionResult {
  Tiling tiling;
  std::vector<ReductionStep> steps;
};

/// Shifts maximal paths until each axis has a single maximal path, verifying
/// every intermediate tiling. Throws InvalidTiling for an invalid input,
/// CycleExists when the skeleton has an axis cycle and ReductionStepInvalid
/// when a rebuilt tiling fails verification or does not shrink as required.
ReductionResult reduce_tiling_traced(const Tiling& tiling);
Tiling reduce_tiling(const Tiling& tiling);

}  // namespace torus
