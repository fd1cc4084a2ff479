#include "torus/skeleton.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace torus {

std::string_view to_string(Axis axis) {
  return axis == Axis::Horizontal ? "horizontal" : "vertical";
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "unknown";
}

namespace {

Rat floor_mod(const Rat& a, const Rat& m) { return a - Rat(( a / m).floor()) * m; }

}  // namespace

LineChart::LineChart(const LatticeBasis& basis, Axis axis) : axis_(axis) {
  const Rat d = covolume(basis);
  if (axis == Axis::Horizontal) {
    spacing_ = rat_gcd(basis.u().y, basis.v().y);
    lift_ = y_step_vector(basis);
  } else {
    spacing_ = rat_gcd(basis.u().x, basis.v().x);
    lift_ = x_step_vector(basis);
  }
  circumference_ = d / spacing_;
}

std::pair<Rat, Rat> LineChart::split(const Vec2& x) const {
  return axis_ == Axis::Horizontal ? std::pair{x.x, x.y} : std::pair{x.y, x.x};
}

Rat LineChart::line_of(const Vec2& x) const {
  return floor_mod(split(x).second, spacing_);
}

Rat LineChart::position_of(const Vec2& x) const {
  const auto [along, across] = split(x);
  const Rat k((across / spacing_).floor());
  return floor_mod(along - k * split(lift_).first, circumference_);
}

Vec2 LineChart::point(const Rat& line, const Rat& position) const {
  return axis_ == Axis::Horizontal ? Vec2{position, line} : Vec2{line, position};
}

Rat Skeleton::total_length() const {
  Rat total;
  for (const auto& e : edges) total += e.length;
  return total;
}

namespace {

struct SideArc {
  Rat line;
  Rat start;
  Rat length;
  SideRef ref;
};

std::vector<SideArc> side_arcs(const Tiling& t, const LineChart& chart) {
  std::vector<SideArc> arcs;
  for (std::size_t i = 0; i < t.rects.size(); ++i) {
    const Rect& r = t.rects[i];
    if (chart.axis() == Axis::Horizontal) {
      const Vec2 bottom{r.x0, r.y0}, top{r.x0, r.y1};
      arcs.push_back({chart.line_of(bottom), chart.position_of(bottom), r.width(), {i, Side::Bottom}});
      arcs.push_back({chart.line_of(top), chart.position_of(top), r.width(), {i, Side::Top}});
    } else {
      const Vec2 left{r.x0, r.y0}, right{r.x1, r.y0};
      arcs.push_back({chart.line_of(left), chart.position_of(left), r.height(), {i, Side::Left}});
      arcs.push_back({chart.line_of(right), chart.position_of(right), r.height(), {i, Side::Right}});
    }
  }
  return arcs;
}

// Splits every side arc of one orientation at the vertices on its line and
// merges coinciding pieces into atomic edges.
void add_axis_edges(const Tiling& t, const LineChart& chart, const std::vector<Vec2>& corners,
                    std::vector<SkeletonEdge>& edges) {
  std::map<Rat, std::set<Rat>> breakpoints;
  for (const Vec2& c : corners) breakpoints[chart.line_of(c)].insert(chart.position_of(c));

  std::map<Rat, std::vector<SideArc>> by_line;
  for (auto& arc : side_arcs(t, chart)) by_line[arc.line].push_back(std::move(arc));

  const Rat& circ = chart.circumference();
  const Side low = chart.axis() == Axis::Horizontal ? Side::Top : Side::Right;
  for (const auto& [line, arcs] : by_line) {
    const std::vector<Rat> cuts(breakpoints[line].begin(), breakpoints[line].end());
    const std::size_t m = cuts.size();
    std::vector<std::vector<SideRef>> cover(m);
    auto interval_length = [&](std::size_t k) {
      return k + 1 < m ? cuts[k + 1] - cuts[k] : cuts[0] + circ - cuts[k];
    };
    for (const SideArc& arc : arcs) {
      const auto it = std::lower_bound(cuts.begin(), cuts.end(), arc.start);
      if (it == cuts.end() || *it != arc.start)
        throw std::logic_error("side arc does not start at a vertex");
      std::size_t k = static_cast<std::size_t>(it - cuts.begin());
      Rat remaining = arc.length;
      while (remaining.sign() > 0) {
        cover[k].push_back(arc.ref);
        remaining -= interval_length(k);
        k = (k + 1) % m;
      }
      if (!remaining.is_zero()) throw std::logic_error("side arc does not end at a vertex");
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (cover[k].empty()) continue;
      std::sort(cover[k].begin(), cover[k].end());
      // One side from each neighbouring rectangle: a top (right) side from
      // below (left) and a bottom (left) side from above (right).
      const auto lows = std::count_if(cover[k].begin(), cover[k].end(),
                                      [&](const SideRef& s) { return s.side == low; });
      if (cover[k].size() != 2 || lows != 1) {
        std::ostringstream msg;
        msg << to_string(chart.axis()) << " segment at line " << line << ", position " << cuts[k]
            << " is covered by " << cover[k].size() << " rectangle sides";
        throw TilerError(ErrorKind::InvalidTiling, msg.str());
      }
      const Rat len = interval_length(k);
      edges.push_back({chart.axis(), line, cuts[k], len,
                       canonicalize(t.basis, chart.point(line, cuts[k])),
                       canonicalize(t.basis, chart.point(line, cuts[k] + len)), cover[k]});
    }
  }
}

}  // namespace

Skeleton build_skeleton(const Tiling& tiling) {
  const VerificationReport report = verify_tiling(tiling);
  if (!report.valid)
    throw TilerError(ErrorKind::InvalidTiling,
                     "skeleton requires a valid tiling: " + report.violations.front().detail);

  std::vector<Vec2> corners;
  corners.reserve(4 * tiling.rects.size());
  for (const Rect& r : tiling.rects) {
    corners.push_back({r.x0, r.y0});
    corners.push_back({r.x1, r.y0});
    corners.push_back({r.x0, r.y1});
    corners.push_back({r.x1, r.y1});
  }

  Skeleton sk{tiling.basis, {}, {}};
  std::set<TorusPoint> vertices;
  for (const Vec2& c : corners) vertices.insert(canonicalize(tiling.basis, c));
  sk.vertices.assign(vertices.begin(), vertices.end());

  add_axis_edges(tiling, LineChart(tiling.basis, Axis::Horizontal), corners, sk.edges);
  add_axis_edges(tiling, LineChart(tiling.basis, Axis::Vertical), corners, sk.edges);
  return sk;
}

namespace {

void decompose_axis(const Skeleton& sk, Axis axis, std::vector<AxisRun>& cycles,
                    std::vector<AxisRun>& paths) {
  const LineChart chart(sk.basis, axis);
  const Rat& circ = chart.circumference();

  std::map<Rat, std::vector<std::size_t>> by_line;  // edges arrive sorted by start
  for (std::size_t k = 0; k < sk.edges.size(); ++k)
    if (sk.edges[k].axis == axis) by_line[sk.edges[k].line].push_back(k);

  for (const auto& [line, ids] : by_line) {
    Rat covered;
    for (std::size_t k : ids) covered += sk.edges[k].length;
    if (covered == circ) {
      cycles.push_back({axis, line, sk.edges[ids.front()].start, covered, ids});
      continue;
    }
    const std::size_t n = ids.size();
    auto end_of = [&](std::size_t k) {
      return floor_mod(sk.edges[k].start + sk.edges[k].length, circ);
    };
    auto joins = [&](std::size_t prev, std::size_t next) {
      return end_of(ids[prev]) == sk.edges[ids[next]].start;
    };
    // Begin at an edge whose predecessor on the circle does not touch it.
    std::size_t first = 0;
    while (joins((first + n - 1) % n, first)) ++first;
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t at = (first + step) % n;
      const SkeletonEdge& e = sk.edges[ids[at]];
      if (step == 0 || !joins((at + n - 1) % n, at)) {
        paths.push_back({axis, line, e.start, Rat(0), {}});
      }
      paths.back().edges.push_back(ids[at]);
      paths.back().length += e.length;
    }
  }
  std::sort(paths.begin(), paths.end(), [](const AxisRun& a, const AxisRun& b) {
    return a.line != b.line ? a.line < b.line : a.start < b.start;
  });
}

}  // namespace

AxisPathDecomposition decompose_axis_paths(const Skeleton& skeleton) {
  AxisPathDecomposition out;
  decompose_axis(skeleton, Axis::Horizontal, out.cycles_h, out.paths_h);
  decompose_axis(skeleton, Axis::Vertical, out.cycles_v, out.paths_v);
  return out;
}

}  // namespace torus
