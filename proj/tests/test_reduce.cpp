#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torus/error.hpp"
#include "torus/skeleton.hpp"

#include <optional>

using namespace torus;
using torus::testing::Rng;

namespace {

const LatticeBasis kFigLeft(3, 5, -4, 1);

ErrorKind kind_of(const Tiling& t) {
  try {
    reduce_tiling(t);
  } catch (const TilerError& e) {
    return e.kind();
  }
  FAIL("expected reduce_tiling to throw");
  return ErrorKind::Parse;
}

Tiling split_left() {
  return {kFigLeft,
          {Rect::make(-4, -1, 0, 1), Rect::make(-1, 3, 0, 2), Rect::make(-1, 3, 2, 5)}};
}

}  // namespace

TEST_CASE("17 -> 13 worked reduction") {
  const Tiling t = split_left();
  REQUIRE(tiling_length(t) == Rat(17));
  const AxisPathDecomposition dec = decompose_axis_paths(build_skeleton(t));
  CHECK(dec.paths_h.size() == 2);
  CHECK(dec.paths_v.size() == 1);

  const ReductionResult r = reduce_tiling_traced(t);
  REQUIRE(r.steps.size() == 1);
  const ReductionStep& s = r.steps.front();
  CHECK(s.axis == Axis::Horizontal);
  CHECK_FALSE(s.mirrored);
  CHECK(s.s1.empty());
  CHECK(s.s2 == std::vector<std::size_t>{1});
  CHECK(s.s3 == std::vector<std::size_t>{2});
  CHECK(s.shift == Rat(2));
  CHECK(s.eliminated == std::vector<std::size_t>{1});
  CHECK(s.path_length == Rat(4));
  CHECK(s.length_before == Rat(17));
  CHECK(s.length_bound == Rat(17) - Rat(4) - Rat(2) * Rat(0));
  CHECK(s.length_after == Rat(13));

  CHECK(tiling_length(r.tiling) == Rat(13));
  CHECK(r.tiling.rects == build_optimal(kFigLeft).rects);
}

TEST_CASE("already reduced tilings are unchanged") {
  const Tiling t = build_optimal(kFigLeft);
  const ReductionResult r = reduce_tiling_traced(t);
  CHECK(r.steps.empty());
  CHECK(r.tiling.rects == t.rects);
}

TEST_CASE("reduction preconditions") {
  CHECK(kind_of(build_one_rect(LatticeBasis(1, 0, 0, 1), RectAxis::X)) == ErrorKind::CycleExists);
  CHECK(kind_of(build_one_rect(kFigLeft, RectAxis::X)) == ErrorKind::CycleExists);
  CHECK(kind_of({kFigLeft, {Rect::make(-4, -1, 0, 1)}}) == ErrorKind::InvalidTiling);
}

TEST_CASE("a shift that would close a cycle gives way to the next path") {
  // Shifting the lowest-anchored path here wraps a horizontal line; the next
  // path reduces cleanly.
  const Tiling t{LatticeBasis(15, -15, 10, 7),
                 {Rect::make(-5, -1, 0, Rat(33, 2)), Rect::make(5, Rat(35, 4), 0, Rat(7, 3)),
                  Rect::make(-1, 5, 0, 22), Rect::make(Rat(35, 4), 9, 0, 7),
                  Rect::make(5, Rat(25, 4), Rat(7, 3), 7), Rect::make(9, 10, 0, 7),
                  Rect::make(-5, -1, Rat(33, 2), 22), Rect::make(Rat(25, 4), Rat(35, 4), Rat(7, 3), 7)}};
  REQUIRE(verify_tiling(t).valid);
  const ReductionResult r = reduce_tiling_traced(t);
  CHECK(verify_tiling(r.tiling).valid);
  const AxisPathDecomposition dec = decompose_axis_paths(build_skeleton(r.tiling));
  CHECK_FALSE(dec.has_cycle());
  CHECK(dec.paths_h.size() == 1);
  CHECK(dec.paths_v.size() == 1);
  CHECK(tiling_length(r.tiling) < tiling_length(t));
}

TEST_CASE("stacked slabs on one torus line cannot be reduced without a cycle") {
  // Both cuts of the tall rectangle lie on the same horizontal line, and any
  // shift merges them with the base line into a closed loop of length d_x.
  const Tiling t{LatticeBasis(-15, -5, -13, -3),
                 {Rect::make(-9, -7, 0, 1), Rect::make(-7, 2, 0, Rat(2, 3)),
                  Rect::make(-7, 2, Rat(2, 3), Rat(5, 3)), Rect::make(-7, 2, Rat(5, 3), 2)}};
  REQUIRE(verify_tiling(t).valid);
  REQUIRE_FALSE(decompose_axis_paths(build_skeleton(t)).has_cycle());
  CHECK(kind_of(t) == ErrorKind::CycleExists);
  // The cyclic alternative is no shorter than the one-rectangle bound.
  const Tiling cyclic{t.basis,
                      {Rect::make(-9, -7, 0, 1), Rect::make(-7, 2, 0, 1), Rect::make(-7, 2, 1, 2)}};
  REQUIRE(verify_tiling(cyclic).valid);
  CHECK(decompose_axis_paths(build_skeleton(cyclic)).has_cycle());
  CHECK(tiling_length(cyclic) >= axis_periods(t.basis).m_x);
}

TEST_CASE("property: reduction is monotone and ends with one path per axis") {
  Rng rng(61);
  int reduced = 0;
  for (int i = 0; i < 300; ++i) {
    const LatticeBasis b = testing::random_int_basis(rng, 15).lattice();
    const Tiling t =
        testing::split_randomly(build_optimal(b), static_cast<int>(testing::uniform(rng, 0, 6)), rng);
    if (decompose_axis_paths(build_skeleton(t)).has_cycle()) continue;
    std::optional<ReductionResult> attempt;
    try {
      attempt = reduce_tiling_traced(t);
    } catch (const TilerError& e) {
      CHECK(e.kind() == ErrorKind::CycleExists);
      continue;
    }
    ++reduced;
    const ReductionResult& r = *attempt;
    CHECK(verify_tiling(r.tiling).valid);
    const AxisPathDecomposition dec = decompose_axis_paths(build_skeleton(r.tiling));
    CHECK_FALSE(dec.has_cycle());
    CHECK(dec.paths_h.size() <= 1);
    CHECK(dec.paths_v.size() <= 1);
    CHECK(tiling_length(r.tiling) <= tiling_length(t));
    CHECK(tiling_length(r.tiling) >= min_length(b).min_length);
    Rat previous = tiling_length(t);
    for (const ReductionStep& s : r.steps) {
      CHECK(s.length_before == previous);
      CHECK(s.length_after < s.length_before);
      CHECK(s.length_after <= s.length_bound);
      CHECK_FALSE(s.eliminated.empty());
      CHECK(s.shift.sign() > 0);
      previous = s.length_after;
    }
    CHECK(previous == tiling_length(r.tiling));
  }
  CHECK(reduced > 100);
}
