#include "torus/skeleton.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace torus {

namespace {

void require_acyclic(const AxisPathDecomposition& dec, std::string_view when) {
  if (!dec.has_cycle()) return;
  const bool horizontal = !dec.cycles_h.empty();
  std::ostringstream msg;
  msg << "skeleton " << when << " contains a " << (horizontal ? "horizontal" : "vertical")
      << " cycle; every tiling with an axis cycle is at least as long as the matching "
         "one-rectangle tiling, so path reduction does not apply";
  throw TilerError(ErrorKind::CycleExists, msg.str());
}

// Shifts the given maximal horizontal path of t. Returns nothing when no
// rectangle has exactly one of its horizontal sides on the path.
std::optional<ReductionStep> shift_path(Tiling& t, const Skeleton& sk, const AxisRun& path) {
  const std::set<std::size_t> on_path(path.edges.begin(), path.edges.end());

  // A side lies on the path when every atomic edge it covers belongs to it.
  std::map<SideRef, bool> side_on_path;
  for (std::size_t k = 0; k < sk.edges.size(); ++k) {
    if (sk.edges[k].axis != Axis::Horizontal) continue;
    for (const SideRef& s : sk.edges[k].sides) {
      auto [it, fresh] = side_on_path.try_emplace(s, true);
      it->second = it->second && on_path.count(k) != 0;
    }
  }
  auto on = [&](std::size_t i, Side side) {
    const auto it = side_on_path.find({i, side});
    return it != side_on_path.end() && it->second;
  };

  ReductionStep step;
  step.line = path.line;
  step.start = path.start;
  step.path_length = path.length;
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    const bool top = on(i, Side::Top);
    const bool bottom = on(i, Side::Bottom);
    if (top && bottom)
      step.s1.push_back(i);
    else if (top)
      step.s2.push_back(i);
    else if (bottom)
      step.s3.push_back(i);
  }
  if (step.s2.empty() && step.s3.empty()) return std::nullopt;

  // The path moves towards the larger of S2 (below it) and S3 (above it).
  step.mirrored = step.s2.size() < step.s3.size();
  const auto& shrinking = step.mirrored ? step.s3 : step.s2;
  step.shift = t.rects[shrinking.front()].height();
  for (std::size_t i : shrinking) step.shift = min(step.shift, t.rects[i].height());
  const Rat& h = step.shift;

  std::vector<std::optional<Rect>> rebuilt(t.rects.begin(), t.rects.end());
  auto move = [&](std::size_t i, const Rat& dy0, const Rat& dy1) {
    Rect r = t.rects[i];
    r.y0 += dy0;
    r.y1 += dy1;
    rebuilt[i] = r;
  };
  if (!step.mirrored) {
    for (std::size_t i : step.s1) move(i, -h, -h);
    for (std::size_t i : step.s2) move(i, 0, -h);
    for (std::size_t i : step.s3) move(i, -h, 0);
  } else {
    for (std::size_t i : step.s1) move(i, h, h);
    for (std::size_t i : step.s2) move(i, 0, h);
    for (std::size_t i : step.s3) move(i, h, 0);
  }

  step.length_before = tiling_length(t);
  Tiling next{t.basis, {}};
  for (std::size_t i = 0; i < rebuilt.size(); ++i) {
    if (rebuilt[i]->height().is_zero())
      step.eliminated.push_back(i);
    else
      next.rects.push_back(*rebuilt[i]);
  }
  if (step.eliminated.empty())
    throw TilerError(ErrorKind::ReductionStepInvalid, "path shift eliminated no rectangle");

  const VerificationReport report = verify_tiling(next);
  if (!report.valid)
    throw TilerError(ErrorKind::ReductionStepInvalid,
                     "shifted rectangles do not tile the torus: " + report.violations.front().detail);

  const auto grow = static_cast<long>(step.s2.size()) - static_cast<long>(step.s3.size());
  const Rat imbalance(step.mirrored ? -grow : grow);
  step.length_after = tiling_length(next);
  step.length_bound =
      step.length_before - t.rects[step.eliminated.front()].width() - h * imbalance;
  if (!(step.length_after <= step.length_bound) || !(step.length_after < step.length_before)) {
    std::ostringstream msg;
    msg << "shifted tiling has length " << step.length_after << ", expected at most "
        << step.length_bound;
    throw TilerError(ErrorKind::ReductionStepInvalid, msg.str());
  }
  t = std::move(next);
  return step;
}

// Outcome of trying every maximal path of one axis in anchor order.
struct Attempt {
  std::optional<ReductionStep> step;
  bool hit_cycle = false;
};

// Shifts the lowest-anchored maximal horizontal path of t whose result keeps
// the skeleton free of axis cycles.
Attempt reduce_horizontal_once(Tiling& t) {
  const Skeleton sk = build_skeleton(t);
  const AxisPathDecomposition dec = decompose_axis_paths(sk);
  Attempt out;
  if (dec.paths_h.size() <= 1) return out;
  for (const AxisRun& path : dec.paths_h) {
    Tiling next = t;
    auto step = shift_path(next, sk, path);
    if (!step) continue;
    if (decompose_axis_paths(build_skeleton(next)).has_cycle()) {
      out.hit_cycle = true;
      continue;
    }
    t = std::move(next);
    out.step = std::move(step);
    return out;
  }
  return out;
}

}  // namespace

ReductionResult reduce_tiling_traced(const Tiling& tiling) {
  const VerificationReport report = verify_tiling(tiling);
  if (!report.valid)
    throw TilerError(ErrorKind::InvalidTiling,
                     "reduction requires a valid tiling: " + report.violations.front().detail);
  require_acyclic(decompose_axis_paths(build_skeleton(tiling)), "of the input tiling");

  ReductionResult result{tiling, {}};
  // Horizontal paths are preferred, so the horizontal axis is normally
  // finished before any vertical step; vertical steps run on the transposed
  // tiling. A vertical step is also tried when every horizontal shift would
  // close an axis cycle.
  for (;;) {
    Attempt h = reduce_horizontal_once(result.tiling);
    if (h.step) {
      result.steps.push_back(std::move(*h.step));
      continue;
    }
    Tiling flipped = result.tiling.transposed();
    Attempt v = reduce_horizontal_once(flipped);
    if (v.step) {
      v.step->axis = Axis::Vertical;
      result.steps.push_back(std::move(*v.step));
      result.tiling = flipped.transposed();
      continue;
    }
    if (h.hit_cycle || v.hit_cycle)
      throw TilerError(ErrorKind::CycleExists,
                       "every remaining path shift closes an axis cycle; every tiling with an "
                       "axis cycle is at least as long as the matching one-rectangle tiling, so "
                       "path reduction does not apply");
    break;
  }
  return result;
}

Tiling reduce_tiling(const Tiling& tiling) { return reduce_tiling_traced(tiling).tiling; }

}  // namespace torus
