#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torus/error.hpp"
#include "torus/io.hpp"
#include "torus/svg.hpp"

#include <regex>

using namespace torus;
using torus::testing::Rng;

namespace {

const LatticeBasis kFigLeft(3, 5, -4, 1);

std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

ErrorKind parse_kind(const std::string& doc) {
  try {
    io::tiling_from_json(io::Json::parse(doc));
  } catch (const TilerError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ErrorKind::Overflow;
}

}  // namespace

TEST_CASE("parse_basis") {
  CHECK(io::parse_basis("3 5 -4 1") == kFigLeft);
  CHECK(io::parse_basis("  1/2\t0 0  3/4 ").u() == Vec2{Rat(1, 2), 0});
  for (const char* bad : {"", "1 2 3", "1 2 3 4 5", "1 2 x 4", "1/0 0 0 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(io::parse_basis(bad), TilerError);
  }
  try {
    io::parse_basis("1 2 2 4");
    FAIL("singular basis accepted");
  } catch (const TilerError& e) {
    CHECK(e.kind() == ErrorKind::SingularBasis);
  }
}

TEST_CASE("tiling documents") {
  const Tiling t = build_optimal(kFigLeft);
  const std::string text = io::dump(io::tiling_to_json(t));
  CHECK(text ==
        "{\n  \"basis\": [\n    [\n      \"3\",\n      \"5\"\n    ],\n    [\n      \"-4\",\n"
        "      \"1\"\n    ]\n  ],\n  \"rects\": [\n    [\n      \"-4\",\n      \"-1\",\n      "
        "\"0\",\n      \"1\"\n    ],\n    [\n      \"-1\",\n      \"3\",\n      \"0\",\n      "
        "\"5\"\n    ]\n  ]\n}\n");
  const Tiling back = io::tiling_from_json(io::Json::parse(text));
  CHECK(back.basis == t.basis);
  CHECK(back.rects == t.rects);

  // Plain integers are accepted on input.
  const Tiling ints = io::tiling_from_json(
      io::Json::parse(R"({"basis": [[1, 0], [0, 1]], "rects": [[0, "1", 0, 1]]})"));
  CHECK(ints.rects.front() == Rect::make(0, 1, 0, 1));
}

TEST_CASE("property: tiling documents round-trip byte for byte") {
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const Tiling t = testing::split_randomly(build_optimal(testing::random_rat_basis(rng, 9)), 4, rng);
    const std::string text = io::dump(io::tiling_to_json(t));
    const Tiling back = io::tiling_from_json(io::Json::parse(text));
    CHECK(back.rects == t.rects);
    CHECK(io::dump(io::tiling_to_json(back)) == text);
  }
}

TEST_CASE("malformed tiling documents") {
  CHECK(parse_kind(R"({"rects": []})") == ErrorKind::Parse);
  CHECK(parse_kind(R"({"basis": [[1,0]], "rects": [[0,1,0,1]]})") == ErrorKind::Parse);
  CHECK(parse_kind(R"({"basis": [[1,0],[0,1]], "rects": []})") == ErrorKind::Parse);
  CHECK(parse_kind(R"({"basis": [[1,0],[0,1]], "rects": [[0,1,0]]})") == ErrorKind::Parse);
  CHECK(parse_kind(R"({"basis": [[1,0],[0,1]], "rects": [[0,1,0,"x"]]})") == ErrorKind::Parse);
  CHECK(parse_kind(R"({"basis": [[1,0],[0,1]], "rects": [[0,1,0,0.5]]})") == ErrorKind::Parse);
  CHECK(parse_kind(R"({"basis": [[1,0],[2,0]], "rects": [[0,1,0,1]]})") == ErrorKind::SingularBasis);
  CHECK(parse_kind(R"({"basis": [[1,0],[0,1]], "rects": [[1,0,0,1]]})") == ErrorKind::InvalidTiling);
}

TEST_CASE("report documents") {
  const io::Json ml = io::min_length_to_json(min_length(kFigLeft));
  CHECK(ml["min_length"] == "13");
  CHECK(ml["winner"] == "two_rect");
  CHECK(ml["m_x"] == "24");

  const io::Json unit = io::min_length_to_json(min_length(LatticeBasis(1, 0, 0, 1)));
  CHECK(unit["quadrant_sum"] == "3");
  CHECK(unit["winner"] == "one_rect_x");

  const VerificationReport bad =
      verify_tiling({LatticeBasis(1, 0, 0, 1), {Rect::make(0, 1, 0, 1), Rect::make(0, 1, 0, 1)}});
  const io::Json v = io::verification_to_json(bad);
  CHECK(v["valid"] == false);
  CHECK(v["violations"][0]["kind"] == "overlap");
  CHECK(v["violations"][0]["lattice_vector"] == io::Json::parse(R"(["0","0"])"));

  const Tiling split{kFigLeft,
                     {Rect::make(-4, -1, 0, 1), Rect::make(-1, 3, 0, 2), Rect::make(-1, 3, 2, 5)}};
  const io::Json r = io::reduction_to_json(split, reduce_tiling_traced(split));
  CHECK(r["length_before"] == "17");
  CHECK(r["length"] == "13");
  REQUIRE(r["steps"].size() == 1);
  CHECK(r["steps"][0]["h"] == "2");
  CHECK(r["steps"][0]["s2"] == io::Json::parse("[1]"));
  CHECK(r["steps"][0]["length_bound"] == "13");
}

TEST_CASE("fixed3 rounds half up") {
  CHECK(svg::fixed3(Rat(0)) == "0.000");
  CHECK(svg::fixed3(Rat(1, 3)) == "0.333");
  CHECK(svg::fixed3(Rat(2, 3)) == "0.667");
  CHECK(svg::fixed3(Rat(1, 2000)) == "0.001");
  CHECK(svg::fixed3(Rat(-1, 2000)) == "0.000");
  CHECK(svg::fixed3(Rat(-7, 4)) == "-1.750");
  CHECK(svg::fixed3(Rat(-1, 3)) == "-0.333");
  CHECK(svg::fixed3(Rat(12345)) == "12345.000");
}

TEST_CASE("svg rendering") {
  const std::string left = svg::render(build_optimal(kFigLeft), 640);
  CHECK(left.rfind("<?xml", 0) == 0);
  CHECK(count(left, "<rect class=\"tile\"") == 2);
  CHECK(count(left, "<rect ") == 2);
  CHECK(count(left, "class=\"basis-arrow\"") == 2);
  CHECK(count(left, "class=\"fundamental-domain\"") == 1);
  CHECK(count(left, "class=\"lattice-point\"") >= 4);
  CHECK(left.find("</svg>") != std::string::npos);
  CHECK(left == svg::render(build_optimal(kFigLeft), 640));
  CHECK(left != svg::render(build_optimal(kFigLeft), 320));

  CHECK(count(svg::render(build_one_rect(LatticeBasis(1, 0, 0, 1), RectAxis::X), 100), "<rect ") == 1);
  const Tiling split{kFigLeft,
                     {Rect::make(-4, -1, 0, 1), Rect::make(-1, 3, 0, 2), Rect::make(-1, 3, 2, 5)}};
  CHECK(count(svg::render(split, 640), "<rect ") == 3);
}

TEST_CASE("unbounded axis lengths print as inf and sort last") {
  const AxisLength inf = AxisLength::infinite();
  CHECK(inf.str() == "inf");
  CHECK_FALSE(inf.is_finite());
  CHECK(AxisLength(Rat(1000000)) < inf);
  CHECK_FALSE(inf < AxisLength(Rat(1)));
  CHECK_FALSE(inf < inf);
}
