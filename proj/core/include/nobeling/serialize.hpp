#pragma once

#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nobeling/codim.hpp"
#include "nobeling/game.hpp"
#include "nobeling/geometry.hpp"
#include "nobeling/moves.hpp"

// JSON forms. Rationals always travel as "num/den" strings; JSON numbers and
// decimal strings are rejected on input.
namespace nobeling::json {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Point& p);
Json to_json(const AxisLine& line);
Json to_json(const Box& box);
Json to_json(const Cylinder& cyl);
Json to_json(const MoveMap& move);
Json to_json(const Certificate& cert);
Json to_json(const CodimReport& report);

Scalar scalar_from_json(const Json& j);
Point point_from_json(const Json& j);
AxisLine line_from_json(const Json& j);
Box box_from_json(const Json& j);
Cylinder cylinder_from_json(const Json& j);
/// Rebuilds the move through its constructors, so recorded bounds are
/// re-derived (push away, bump) or re-validated (composite).
MoveMap move_from_json(const Json& j);

/// Checks a certificate document against the published schema
/// (docs/certificate.schema.json). Returns one message per problem.
std::vector<std::string> validate_certificate(const Json& j);

/// Voxel input: one JSON header line {"dim", "resolution"[, "compact"]
/// [, "encoding": "jsonl" | "binary"]} followed either by one JSON array of
/// cell indices per line, or by raw little-endian uint32 indices.
VoxelSet read_voxels(std::istream& in);

}  // namespace nobeling::json
