#pragma once

#include "torus/skeleton.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace torus::io {

// Key order is part of the format: documents are emitted and re-read with
// ordered_json so a parse/dump round trip reproduces them byte for byte.
using Json = nlohmann::ordered_json;

/// "p q r s" (whitespace separated rationals) -> {(p, q), (r, s)}.
LatticeBasis parse_basis(std::string_view text);

Json to_json(const Rat& r);
Json to_json(const Vec2& v);
Rat rat_from_json(const Json& j);
Vec2 vec_from_json(const Json& j);

/// {"basis": [[p,q],[r,s]], "rects": [[x0,x1,y0,y1], ...]}
Json tiling_to_json(const Tiling& tiling);
Tiling tiling_from_json(const Json& j);

Json min_length_to_json(const MinLengthReport& report);
Json verification_to_json(const VerificationReport& report);
Json skeleton_to_json(const Skeleton& skeleton, const AxisPathDecomposition& decomposition);
Json reduction_to_json(const Tiling& input, const ReductionResult& result);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace torus::io
