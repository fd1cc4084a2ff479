#include "torus/skeleton.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torus {

TorusPoint canonicalize(const LatticeBasis& basis, const Vec2& x) {
  const auto [z1, z2] = basis.coordinates(x);
  const Rat f1 = z1 - Rat(z1.floor());
  const Rat f2 = z2 - Rat(z2.floor());
  return {basis.combine(f1, f2)};
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Injectivity: return "injectivity";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::Coverage: return "coverage";
  }
  return "unknown";
}

namespace {

// Smallest witness by (l1 norm, x, y) so reports are reproducible.
std::optional<Vec2> pick_witness(const std::vector<Vec2>& candidates) {
  std::optional<Vec2> best;
  std::optional<Rat> best_norm;
  for (const Vec2& c : candidates) {
    const Rat n = l1_norm(c);
    if (!best || n < *best_norm || (n == *best_norm && c < *best)) {
      best = c;
      best_norm = n;
    }
  }
  return best;
}

std::string describe(const Rect& r) {
  std::ostringstream os;
  os << '[' << r.x0 << ", " << r.x1 << "] x [" << r.y0 << ", " << r.y1 << ']';
  return os.str();
}

// Condition (i): no nonzero lattice vector inside (-w, w) x (-h, h).
std::optional<Violation> check_injectivity(const Tiling& t, std::size_t i) {
  const Rect& r = t.rects[i];
  const Rat w = r.width();
  const Rat h = r.height();
  std::vector<Vec2> hits;
  for (const Vec2& x : enumerate_lattice_points_serial(t.basis, w + h)) {
    if (x.is_zero()) continue;
    if (x.x.abs() < w && x.y.abs() < h) hits.push_back(canonical_q1(x));
  }
  auto witness = pick_witness(hits);
  if (!witness) return std::nullopt;
  std::ostringstream msg;
  msg << "rectangle " << i << ' ' << describe(r) << " overlaps its own translate by " << *witness;
  return Violation{ViolationKind::Injectivity, {i}, witness, msg.str()};
}

// Condition (ii): Ri° + lambda meets Rj° iff lambda lies in the open
// Minkowski difference box.
std::optional<Violation> check_overlap(const Tiling& t, std::size_t i, std::size_t j) {
  const Rect& a = t.rects[i];
  const Rect& b = t.rects[j];
  const Vec2 lo{b.x0 - a.x1, b.y0 - a.y1};
  const Vec2 hi{b.x1 - a.x0, b.y1 - a.y0};
  auto witness = pick_witness(lattice_points_in_open_box(t.basis, lo, hi));
  if (!witness) return std::nullopt;
  std::ostringstream msg;
  msg << "rectangle " << i << ' ' << describe(a) << " translated by " << *witness
      << " overlaps rectangle " << j << ' ' << describe(b);
  return Violation{ViolationKind::Overlap, {i, j}, witness, msg.str()};
}

struct CheckTask {
  std::size_t i;
  std::size_t j;  // j == i: injectivity of rectangle i
};

std::vector<CheckTask> make_tasks(std::size_t n) {
  std::vector<CheckTask> tasks;
  tasks.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) tasks.push_back({i, i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) tasks.push_back({i, j});
  return tasks;
}

std::optional<Violation> run_task(const Tiling& t, const CheckTask& task) {
  return task.i == task.j ? check_injectivity(t, task.i) : check_overlap(t, task.i, task.j);
}

VerificationReport assemble(const Tiling& t, std::vector<std::optional<Violation>> results) {
  VerificationReport report;
  for (auto& r : results)
    if (r) report.violations.push_back(std::move(*r));

  const Rat area = total_area(t);
  const Rat d = covolume(t.basis);
  if (area != d) {
    std::ostringstream msg;
    msg << "rectangle areas sum to " << area << " but the torus has area " << d;
    report.violations.push_back({ViolationKind::Coverage, {}, std::nullopt, msg.str()});
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace

VerificationReport verify_tiling_serial(const Tiling& tiling) {
  const auto tasks = make_tasks(tiling.rects.size());
  std::vector<std::optional<Violation>> results(tasks.size());
  for (std::size_t k = 0; k < tasks.size(); ++k) results[k] = run_task(tiling, tasks[k]);
  return assemble(tiling, std::move(results));
}

VerificationReport verify_tiling(const Tiling& tiling) {
  const auto tasks = make_tasks(tiling.rects.size());
  std::vector<std::optional<Violation>> results(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k)
    results[static_cast<std::size_t>(k)] = run_task(tiling, tasks[static_cast<std::size_t>(k)]);
  return assemble(tiling, std::move(results));
}

}  // namespace torus
