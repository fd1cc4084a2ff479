#include "torus/io.hpp"

#include "torus/error.hpp"

#include <sstream>

namespace torus::io {

LatticeBasis parse_basis(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rat> values;
  std::string token;
  while (in >> token) values.push_back(Rat::parse(token));
  if (values.size() != 4)
    throw TilerError(ErrorKind::Parse, "basis needs exactly four rationals \"p q r s\", got " +
                                           std::to_string(values.size()));
  return LatticeBasis(values[0], values[1], values[2], values[3]);
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Vec2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw TilerError(ErrorKind::Parse, "expected a rational string, got " + j.dump());
}

Vec2 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw TilerError(ErrorKind::Parse, "expected a pair [x, y], got " + j.dump());
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

Json tiling_to_json(const Tiling& tiling) {
  Json rects = Json::array();
  for (const Rect& r : tiling.rects)
    rects.push_back(Json::array({to_json(r.x0), to_json(r.x1), to_json(r.y0), to_json(r.y1)}));
  Json out;
  out["basis"] = Json::array({to_json(tiling.basis.u()), to_json(tiling.basis.v())});
  out["rects"] = std::move(rects);
  return out;
}

Tiling tiling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("rects"))
    throw TilerError(ErrorKind::Parse, "tiling document needs \"basis\" and \"rects\"");
  const Json& b = j.at("basis");
  if (!b.is_array() || b.size() != 2)
    throw TilerError(ErrorKind::Parse, "\"basis\" must be [[p,q],[r,s]]");
  Tiling t{LatticeBasis(vec_from_json(b[0]), vec_from_json(b[1])), {}};
  const Json& rects = j.at("rects");
  if (!rects.is_array() || rects.empty())
    throw TilerError(ErrorKind::Parse, "\"rects\" must be a nonempty array");
  for (const Json& r : rects) {
    if (!r.is_array() || r.size() != 4)
      throw TilerError(ErrorKind::Parse, "rectangle must be [x0,x1,y0,y1], got " + r.dump());
    t.rects.push_back(Rect::make(rat_from_json(r[0]), rat_from_json(r[1]), rat_from_json(r[2]),
                                 rat_from_json(r[3])));
  }
  return t;
}

Json min_length_to_json(const MinLengthReport& report) {
  Json out;
  out["covolume"] = to_json(report.covolume);
  out["d_x"] = to_json(report.d_x);
  out["d_y"] = to_json(report.d_y);
  out["m_x"] = report.m_x.str();
  out["m_y"] = report.m_y.str();
  out["quadrant_sum"] = to_json(report.quadrant_sum);
  out["min_length"] = to_json(report.min_length);
  out["winner"] = std::string(to_string(report.winner));
  out["witness"] = {{"u1", to_json(report.witness.u1)}, {"u2", to_json(report.witness.u2)}};
  return out;
}

Json verification_to_json(const VerificationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json item;
    item["kind"] = std::string(to_string(v.kind));
    item["rects"] = v.rects;
    item["lattice_vector"] = v.lattice_vector ? to_json(*v.lattice_vector) : Json();
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  Json out;
  out["valid"] = report.valid;
  out["violations"] = std::move(violations);
  return out;
}

namespace {

Json runs_to_json(const std::vector<AxisRun>& runs) {
  Json out = Json::array();
  for (const AxisRun& run : runs) {
    Json item;
    item["line"] = to_json(run.line);
    item["start"] = to_json(run.start);
    item["length"] = to_json(run.length);
    item["edges"] = run.edges;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

Json skeleton_to_json(const Skeleton& skeleton, const AxisPathDecomposition& decomposition) {
  Json vertices = Json::array();
  for (const TorusPoint& p : skeleton.vertices) vertices.push_back(to_json(p.rep));
  Json edges = Json::array();
  for (const SkeletonEdge& e : skeleton.edges) {
    Json item;
    item["axis"] = std::string(to_string(e.axis));
    item["origin"] = to_json(e.origin.rep);
    item["target"] = to_json(e.target.rep);
    item["length"] = to_json(e.length);
    Json sides = Json::array();
    for (const SideRef& s : e.sides) sides.push_back({{"rect", s.rect}, {"side", std::string(to_string(s.side))}});
    item["sides"] = std::move(sides);
    edges.push_back(std::move(item));
  }
  Json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["total_length"] = to_json(skeleton.total_length());
  out["cycles_h"] = runs_to_json(decomposition.cycles_h);
  out["cycles_v"] = runs_to_json(decomposition.cycles_v);
  out["paths_h"] = runs_to_json(decomposition.paths_h);
  out["paths_v"] = runs_to_json(decomposition.paths_v);
  return out;
}

Json reduction_to_json(const Tiling& input, const ReductionResult& result) {
  Json steps = Json::array();
  for (const ReductionStep& s : result.steps) {
    Json item;
    item["axis"] = std::string(to_string(s.axis));
    item["path"] = {{"line", to_json(s.line)}, {"start", to_json(s.start)},
                    {"length", to_json(s.path_length)}};
    item["mirrored"] = s.mirrored;
    item["s1"] = s.s1;
    item["s2"] = s.s2;
    item["s3"] = s.s3;
    item["h"] = to_json(s.shift);
    item["eliminated"] = s.eliminated;
    item["length_before"] = to_json(s.length_before);
    item["length_after"] = to_json(s.length_after);
    item["length_bound"] = to_json(s.length_bound);
    steps.push_back(std::move(item));
  }
  Json out;
  out["length_before"] = to_json(tiling_length(input));
  out["length"] = to_json(tiling_length(result.tiling));
  out["tiling"] = tiling_to_json(result.tiling);
  out["steps"] = std::move(steps);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace torus::io
