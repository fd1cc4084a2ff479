#include "torus/cli.hpp"

#include "torus/error.hpp"
#include "torus/io.hpp"
#include "torus/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace torus::cli {

namespace {

using io::Json;

struct Options {
  std::string basis;
  std::string tiling_path;
  std::string output_path;
  std::string force;
  std::string radius;
  int width = 640;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open tiling file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + opt.output_path + "'");
  file << text;
  if (!file) throw UsageError("failed writing '" + opt.output_path + "'");
}

LatticeBasis require_basis(const Options& opt) {
  if (opt.basis.empty()) throw UsageError("a basis is required: -b \"p q r s\"");
  return io::parse_basis(opt.basis);
}

// The tiling file carries its own basis; -b, when also given, must describe
// the same lattice.
Tiling load_tiling(const Options& opt) {
  if (opt.tiling_path.empty()) throw UsageError("a tiling file is required: -t tiling.json");
  Tiling t = io::tiling_from_json(read_json_file(opt.tiling_path));
  if (!opt.basis.empty() && !io::parse_basis(opt.basis).generates_same_lattice(t.basis))
    throw UsageError("basis given with -b does not generate the tiling file's lattice");
  return t;
}

int cmd_minlen(const Options& opt, std::ostream& out) {
  emit(opt, out, io::dump(io::min_length_to_json(min_length(require_basis(opt)))));
  return kOk;
}

Tiling forced_two_rect(const LatticeBasis& basis, const MinLengthReport& report) {
  // The given generators are used when they already meet the sign pattern
  // (one strictly inside Q1, the other in Q2); otherwise the quadrant basis.
  const Vec2& u = basis.u();
  const Vec2& v = basis.v();
  auto strict_q1 = [](const Vec2& x) { return (x.x * x.y).sign() > 0; };
  auto in_q2 = [](const Vec2& x) { return quadrant_of(x) == Quadrant::Q2; };
  if ((strict_q1(u) && in_q2(v)) || (strict_q1(v) && in_q2(u))) return build_two_rect(basis, u, v);
  return build_two_rect(basis, report.witness);
}

int cmd_build(const Options& opt, std::ostream& out) {
  const LatticeBasis basis = require_basis(opt);
  const MinLengthReport report = min_length(basis);
  Tiling t = [&] {
    if (opt.force.empty()) return build_optimal(basis, report);
    if (opt.force == "one-rect-x") return build_one_rect(basis, RectAxis::X);
    if (opt.force == "one-rect-y") return build_one_rect(basis, RectAxis::Y);
    if (opt.force == "two-rect") return forced_two_rect(basis, report);
    throw UsageError("--force must be one of one-rect-x, one-rect-y, two-rect");
  }();
  emit(opt, out, io::dump(io::tiling_to_json(t)));
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const VerificationReport report = verify_tiling(load_tiling(opt));
  emit(opt, out, io::dump(io::verification_to_json(report)));
  return report.valid ? kOk : kInvalid;
}

int cmd_skeleton(const Options& opt, std::ostream& out) {
  const Skeleton sk = build_skeleton(load_tiling(opt));
  emit(opt, out, io::dump(io::skeleton_to_json(sk, decompose_axis_paths(sk))));
  return kOk;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  const Tiling input = load_tiling(opt);
  emit(opt, out, io::dump(io::reduction_to_json(input, reduce_tiling_traced(input))));
  return kOk;
}

int cmd_render(const Options& opt, std::ostream& out) {
  if (opt.output_path.empty()) throw UsageError("render needs an output path: -o out.svg");
  if (opt.width <= 0) throw UsageError("--width must be a positive number of pixels");
  emit(opt, out, svg::render(load_tiling(opt), opt.width));
  return kOk;
}

Json points_json(const std::vector<Vec2>& points) {
  Json arr = Json::array();
  for (const Vec2& p : points) arr.push_back(io::to_json(p));
  return arr;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const LatticeBasis basis = require_basis(opt);
  const Rat radius =
      opt.radius.empty() ? l1_norm(basis.u()) + l1_norm(basis.v()) : Rat::parse(opt.radius);
  if (radius.sign() < 0) throw UsageError("--radius must be non-negative");

  std::vector<Vec2> points = enumerate_lattice_points(basis, radius);
  std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
    const Rat na = l1_norm(a), nb = l1_norm(b);
    return na != nb ? na < nb : a < b;
  });

  // Brute-force minima over the enumerated ball, independent of the shell
  // search used by quadrant_basis.
  auto minimum = [&](auto keep) {
    std::optional<Rat> best;
    std::vector<Vec2> at;
    for (const Vec2& p : points) {
      if (!keep(p)) continue;
      const Rat n = l1_norm(p);
      if (!best || n < *best) {
        best = n;
        at.clear();
      }
      if (n == *best) at.push_back(p);
    }
    Json j;
    j["norm"] = best ? io::to_json(*best) : Json();
    j["points"] = points_json(at);
    return j;
  };
  auto least_axis = [&](bool x_axis) {
    std::optional<Rat> best;
    for (const Vec2& p : points) {
      const Rat& along = x_axis ? p.x : p.y;
      const Rat& across = x_axis ? p.y : p.x;
      if (across.is_zero() && along.sign() > 0 && (!best || along < *best)) best = along;
    }
    return best ? io::to_json(*best) : Json();
  };

  Json doc;
  doc["radius"] = io::to_json(radius);
  doc["count"] = points.size();
  doc["points"] = points_json(points);
  doc["q1_min"] = minimum([](const Vec2& p) { return !p.is_zero() && quadrant_of(p) == Quadrant::Q1; });
  doc["q2_min"] = minimum([](const Vec2& p) { return quadrant_of(p) == Quadrant::Q2; });
  doc["d_x"] = least_axis(true);
  doc["d_y"] = least_axis(false);
  emit(opt, out, io::dump(doc));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum-length axis-aligned rectangular tilings of flat tori",
               "torus-rect-tiler"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_basis = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-b,--basis", opt.basis, "Basis \"p q r s\": u=(p,q), v=(r,s)");
    if (required) o->required();
  };
  auto add_tiling = [&](CLI::App* sub) {
    sub->add_option("-t,--tiling", opt.tiling_path, "Tiling JSON file")->required();
  };
  auto add_output = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-o,--output", opt.output_path, "Output file (default: stdout)");
    if (required) o->required();
  };

  auto* minlen = app.add_subcommand("minlen", "Minimum tiling length and its candidates");
  add_basis(minlen, true);
  add_output(minlen, false);

  auto* build = app.add_subcommand("build", "Construct an optimal (or forced) tiling");
  add_basis(build, true);
  add_output(build, false);
  build->add_option("--force", opt.force, "one-rect-x | one-rect-y | two-rect");

  auto* verify = app.add_subcommand("verify", "Check the tiling conditions of a tiling file");
  add_basis(verify, false);
  add_tiling(verify);
  add_output(verify, false);

  auto* skeleton = app.add_subcommand("skeleton", "Skeleton graph and axis path decomposition");
  add_basis(skeleton, false);
  add_tiling(skeleton);
  add_output(skeleton, false);

  auto* reduce = app.add_subcommand("reduce", "Shift maximal paths until one remains per axis");
  add_basis(reduce, false);
  add_tiling(reduce);
  add_output(reduce, false);

  auto* render = app.add_subcommand("render", "Draw a tiling as SVG");
  add_basis(render, false);
  add_tiling(render);
  add_output(render, true);
  render->add_option("--width", opt.width, "Image width in pixels");

  auto* oracle = app.add_subcommand("oracle", "Brute-force lattice points within an l1 radius");
  add_basis(oracle, true);
  add_output(oracle, false);
  oracle->add_option("--radius", opt.radius, "l1 radius (rational; default |u|_1 + |v|_1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "torus-rect-tiler: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (minlen->parsed()) return cmd_minlen(opt, out);
    if (build->parsed()) return cmd_build(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (skeleton->parsed()) return cmd_skeleton(opt, out);
    if (reduce->parsed()) return cmd_reduce(opt, out);
    if (render->parsed()) return cmd_render(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
  } catch (const TilerError& e) {
    err << "torus-rect-tiler: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidTiling ? kInvalid : kUsage;
  } catch (const std::exception& e) {
    err << "torus-rect-tiler: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace torus::cli
