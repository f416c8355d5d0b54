#include "nobeling/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "nobeling/errors.hpp"

namespace nobeling::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json optional_box(const std::optional<Box>& b) { return b ? to_json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Point& p) {
  Json arr = Json::array();
  for (const Scalar& c : p.coords()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const AxisLine& line) {
  Json offsets = Json::array();
  for (const Scalar& q : line.offsets()) offsets.push_back(to_json(q));
  return Json{{"axis", line.free_axis()}, {"offsets", std::move(offsets)}};
}

Json to_json(const Box& box) { return Json{{"lo", to_json(box.lo)}, {"hi", to_json(box.hi)}}; }

Json to_json(const Cylinder& cyl) {
  return Json{{"line", to_json(cyl.line)},
              {"start", to_json(cyl.start)},
              {"end", to_json(cyl.end)},
              {"radius", to_json(cyl.radius)},
              {"ramp", to_json(cyl.ramp)}};
}

Json to_json(const MoveMap& move) {
  Json j{{"kind", to_string(move.kind())}};
  if (const auto* pa = move.push_away_params()) {
    j["line"] = to_json(pa->line);
    j["eps"] = to_json(pa->eps);
  } else if (const auto* b = move.bump_params()) {
    j["cylinder"] = to_json(b->cylinder);
    j["direction"] = to_json(b->direction);
    j["amplitude"] = to_json(b->amplitude);
  } else if (move.kind() == MoveKind::kComposite) {
    Json children = Json::array();
    for (const MoveMap& c : move.children()) children.push_back(to_json(c));
    j["children"] = std::move(children);
  }
  j["displacement_bound"] = to_json(move.displacement_bound());
  j["inverse_modulus"] = to_json(move.inverse_modulus());
  j["support"] = optional_box(move.support());
  return j;
}

Json to_json(const Certificate& cert) {
  Json rounds = Json::array();
  for (const auto& r : cert.rounds) {
    rounds.push_back(Json{{"k", r.k},
                          {"eps", to_json(r.eps)},
                          {"delta", to_json(r.delta)},
                          {"line_index", r.line_index.str()},
                          {"clearance", to_json(r.clearance)}});
  }
  Json table = Json::array();
  for (const auto& sb : cert.per_scale_bounds) {
    table.push_back(Json{{"k", sb.k},
                         {"delta", to_json(sb.delta)},
                         {"bound", to_json(cert.injectivity_constant * sb.delta)},
                         {"min_gap", sb.min_gap ? to_json(*sb.min_gap) : Json(nullptr)}});
  }
  return Json{{"dim", cert.dim},
              {"samples", cert.sample_count},
              {"global_eps", to_json(cert.global_eps)},
              {"epsilon_budget", to_json(cert.epsilon_budget)},
              {"C_terms", cert.c_terms},
              {"C_partial", to_json(cert.injectivity_constant)},
              {"rounds", std::move(rounds)},
              {"min_gap_table", std::move(table)}};
}

Json to_json(const CodimReport& report) {
  Json windows = Json::array();
  for (const auto& w : report.windows) {
    windows.push_back(Json{{"lo", w.window.lo},
                           {"hi", w.window.hi},
                           {"complement_nonempty", w.nonempty},
                           {"complement_connected", w.connected}});
  }
  return Json{{"dim", report.dim},
              {"resolution", report.resolution},
              {"windows", std::move(windows)},
              {"verdict", to_string(report.verdict)},
              {"summary", report.summary()}};
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rationals must be \"num/den\" strings, got " + j.dump());
  return Scalar::parse(j.get<std::string>());
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a point is an array of rational strings");
  std::vector<Scalar> c;
  for (const Json& x : j) c.push_back(scalar_from_json(x));
  return Point(std::move(c));
}

AxisLine line_from_json(const Json& j) {
  const Json& axis = field(j, "axis");
  if (!axis.is_number_unsigned()) throw ParseError("line axis must be a non-negative integer");
  const Json& offsets = field(j, "offsets");
  if (!offsets.is_array()) throw ParseError("line offsets must be an array");
  std::vector<Scalar> q;
  for (const Json& x : offsets) q.push_back(scalar_from_json(x));
  return AxisLine(axis.get<std::size_t>(), std::move(q));
}

Box box_from_json(const Json& j) { return Box{point_from_json(field(j, "lo")), point_from_json(field(j, "hi"))}; }

Cylinder cylinder_from_json(const Json& j) {
  return Cylinder{line_from_json(field(j, "line")), scalar_from_json(field(j, "start")),
                  scalar_from_json(field(j, "end")), scalar_from_json(field(j, "radius")),
                  scalar_from_json(field(j, "ramp"))};
}

MoveMap move_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "IDENTITY") return MoveMap::identity();
  if (kind == "PUSH_AWAY") return push_away(line_from_json(field(j, "line")), scalar_from_json(field(j, "eps")));
  if (kind == "BUMP") {
    return bump_displacement(cylinder_from_json(field(j, "cylinder")), point_from_json(field(j, "direction")),
                             scalar_from_json(field(j, "amplitude")));
  }
  if (kind == "COMPOSITE") {
    std::vector<MoveMap> children;
    for (const Json& c : field(j, "children")) children.push_back(move_from_json(c));
    const Json& support = field(j, "support");
    std::optional<Box> box;
    if (!support.is_null()) box = box_from_json(support);
    return MoveMap::composite(std::move(children), scalar_from_json(field(j, "displacement_bound")),
                              scalar_from_json(field(j, "inverse_modulus")), std::move(box));
  }
  throw ParseError("unknown move kind '" + kind + "'");
}

std::vector<std::string> validate_certificate(const Json& j) {
  std::vector<std::string> bad;
  enum class Sign { kAny, kPositive, kPositiveOrNull };
  auto rational = [&](const Json& obj, const char* key, Sign sign) {
    if (!obj.contains(key)) {
      bad.push_back(std::string("missing '") + key + "'");
      return;
    }
    const Json& v = obj.at(key);
    if (sign == Sign::kPositiveOrNull && v.is_null()) return;
    try {
      const Scalar s = scalar_from_json(v);
      if (sign != Sign::kAny && s.sign() <= 0) bad.push_back(std::string("'") + key + "' must be positive");
    } catch (const std::exception& e) {
      bad.push_back(std::string("'") + key + "': " + e.what());
    }
  };
  auto integer = [&](const Json& obj, const char* key, long min) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<long>() < min) {
      bad.push_back(std::string("'") + key + "' must be an integer >= " + std::to_string(min));
    }
  };
  auto keys = [&](const Json& obj, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : obj.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
        bad.push_back("unexpected key '" + k + "'");
      }
    }
  };
  auto array_of_objects = [&](const char* key, auto&& each) {
    if (!j.contains(key) || !j.at(key).is_array()) {
      bad.push_back(std::string("'") + key + "' must be an array");
      return;
    }
    for (const Json& r : j.at(key)) {
      if (!r.is_object()) {
        bad.push_back(std::string("'") + key + "' entries must be objects");
      } else {
        each(r);
      }
    }
  };

  if (!j.is_object()) return {"certificate must be an object"};
  keys(j, {"dim", "samples", "global_eps", "epsilon_budget", "C_terms", "C_partial", "rounds", "min_gap_table"});
  integer(j, "dim", 4);
  integer(j, "samples", 1);
  integer(j, "C_terms", 1);
  rational(j, "global_eps", Sign::kPositive);
  rational(j, "epsilon_budget", Sign::kAny);
  rational(j, "C_partial", Sign::kPositive);
  array_of_objects("rounds", [&](const Json& r) {
    keys(r, {"k", "eps", "delta", "line_index", "clearance"});
    integer(r, "k", 1);
    rational(r, "eps", Sign::kPositive);
    rational(r, "delta", Sign::kPositive);
    rational(r, "clearance", Sign::kPositive);
    const bool ok = r.contains("line_index") && r.at("line_index").is_string() &&
                    !r.at("line_index").get<std::string>().empty() &&
                    r.at("line_index").get<std::string>().find_first_not_of("0123456789") == std::string::npos;
    if (!ok) bad.push_back("'line_index' must be a decimal string");
  });
  array_of_objects("min_gap_table", [&](const Json& r) {
    keys(r, {"k", "delta", "bound", "min_gap"});
    integer(r, "k", 1);
    rational(r, "delta", Sign::kPositive);
    rational(r, "bound", Sign::kPositive);
    rational(r, "min_gap", Sign::kPositiveOrNull);
  });
  return bad;
}

VoxelSet read_voxels(std::istream& in) {
  std::string header_line;
  if (!std::getline(in, header_line)) throw ParseError("voxel input is empty");
  const Json header = Json::parse(header_line);
  const Json& dim = field(header, "dim");
  const Json& res = field(header, "resolution");
  if (!dim.is_number_unsigned() || !res.is_number_unsigned()) {
    throw ParseError("voxel header needs non-negative integer dim and resolution");
  }
  VoxelSet v(dim.get<std::size_t>(), res.get<int>());
  if (header.contains("compact")) v.set_compact(header.at("compact").get<bool>());
  const std::string encoding = header.value("encoding", std::string("jsonl"));

  if (encoding == "binary") {
    Cell c(v.dim());
    std::size_t filled = 0;
    unsigned char buf[4];
    while (in.read(reinterpret_cast<char*>(buf), 4)) {
      const std::uint32_t x = static_cast<std::uint32_t>(buf[0]) | (static_cast<std::uint32_t>(buf[1]) << 8) |
                              (static_cast<std::uint32_t>(buf[2]) << 16) |
                              (static_cast<std::uint32_t>(buf[3]) << 24);
      if (x > static_cast<std::uint32_t>(std::numeric_limits<int>::max())) throw ParseError("cell index too large");
      c[filled++] = static_cast<int>(x);
      if (filled == v.dim()) {
        v.insert(c);
        filled = 0;
      }
    }
    if (filled != 0 || in.gcount() != 0) throw ParseError("truncated binary voxel record");
    return v;
  }
  if (encoding != "jsonl") throw ParseError("unknown voxel encoding '" + encoding + "'");

  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json cell = Json::parse(line);
    if (!cell.is_array()) throw ParseError("voxel cells are JSON arrays of integers");
    v.insert(cell.get<Cell>());
  }
  return v;
}

}  // namespace nobeling::json
