#include <doctest.h>

#include <sstream>

#include "nobeling/errors.hpp"
#include "nobeling/fixtures.hpp"
#include "nobeling/serialize.hpp"

using namespace nobeling;
namespace nj = nobeling::json;

TEST_CASE("scalars travel as strings") {
  CHECK(nj::to_json(Scalar(-3, 6)) == "-1/2");
  CHECK(nj::scalar_from_json(nj::Json("7/21")) == Scalar(1, 3));
  CHECK_THROWS_AS(nj::scalar_from_json(nj::Json(0.5)), ParseError);
  CHECK_THROWS_AS(nj::scalar_from_json(nj::Json("0.5")), ParseError);
  CHECK_THROWS_AS(nj::scalar_from_json(nj::Json(3)), ParseError);
}

TEST_CASE("geometry round trips") {
  const Point p{Scalar(1, 3), 0, -2};
  CHECK(nj::point_from_json(nj::to_json(p)) == p);
  const AxisLine line(1, {Scalar(1, 2), Scalar(-3)});
  CHECK(nj::line_from_json(nj::to_json(line)) == line);
  CHECK_THROWS_AS(nj::line_from_json(nj::Json::parse(R"({"axis": -1, "offsets": []})")), ParseError);
}

TEST_CASE("move maps round trip through JSON") {
  const AxisLine line(0, {Scalar(0), Scalar(1, 2), Scalar(0)});
  const MoveMap pa = push_away(line, Scalar(1, 10));
  CHECK(nj::move_from_json(nj::to_json(pa)) == pa);

  FixtureRng rng(6);
  std::vector<Point> samples;
  for (int i = 0; i < 6; ++i) samples.push_back(rng.point_on(line, 8));
  const MoveMap s = straighten(samples, line, Scalar(1, 2), Scalar(1, 16));
  const MoveMap both = compose(push_away(line, Scalar(1, 64)), s, samples);
  const nj::Json j = nj::to_json(both);
  CHECK(j["kind"] == "COMPOSITE");
  const MoveMap back = nj::move_from_json(nj::Json::parse(j.dump()));
  CHECK(back == both);
  for (const Point& p : samples) CHECK(back.forward(p) == both.forward(p));

  nj::Json loose = j;
  loose["displacement_bound"] = "1000/1";
  CHECK_THROWS(nj::move_from_json(loose));
  nj::Json unknown = j;
  unknown["kind"] = "TWIST";
  CHECK_THROWS_AS(nj::move_from_json(unknown), ParseError);
}

TEST_CASE("certificates validate against the schema") {
  RunConfig cfg;
  cfg.samples = game_fixture(4, 5, 13, 8);
  cfg.rounds = 3;
  const auto [state, cert] = run(cfg);
  const nj::Json j = nj::to_json(cert);
  CHECK(nj::validate_certificate(j).empty());
  CHECK(j["C_partial"] == "21/64");
  CHECK(j["rounds"].size() == 3);

  nj::Json bad = j;
  bad.erase("epsilon_budget");
  CHECK_FALSE(nj::validate_certificate(bad).empty());
  bad = j;
  bad["global_eps"] = 0.1;
  CHECK_FALSE(nj::validate_certificate(bad).empty());
  bad = j;
  bad["rounds"][0]["clearance"] = "0.25";
  CHECK_FALSE(nj::validate_certificate(bad).empty());
  bad = j;
  bad["rounds"][1]["clearance"] = "0/1";
  CHECK_FALSE(nj::validate_certificate(bad).empty());
  bad = j;
  bad["dim"] = 3;
  CHECK_FALSE(nj::validate_certificate(bad).empty());
  bad = j;
  bad["extra"] = 1;
  CHECK_FALSE(nj::validate_certificate(bad).empty());
  bad = j;
  bad["min_gap_table"][0]["min_gap"] = nullptr;
  CHECK(nj::validate_certificate(bad).empty());
  CHECK_FALSE(nj::validate_certificate(nj::Json::array()).empty());
}

TEST_CASE("codim report JSON") {
  const CodimReport r = classify(slab_fixture(2, 4, 0, 2), octant_windows(2, 4));
  const nj::Json j = nj::to_json(r);
  CHECK(j["windows"].size() == 5);
  CHECK(j["verdict"] == to_string(Verdict::kCodimAtLeast1Only));
}

TEST_CASE("read_voxels: JSON lines") {
  std::istringstream in(R"({"dim": 2, "resolution": 4}
[0, 1]
[3, 3]
)");
  const VoxelSet v = nj::read_voxels(in);
  CHECK(v.dim() == 2);
  CHECK(v.occupied_count() == 2);
  CHECK(v.contains({0, 1}));
  CHECK(v.compact());

  std::istringstream flagged(R"({"dim": 2, "resolution": 4, "compact": false})");
  CHECK_FALSE(nj::read_voxels(flagged).compact());

  std::istringstream out_of_range(R"({"dim": 2, "resolution": 4}
[0, 4])");
  CHECK_THROWS(nj::read_voxels(out_of_range));
  std::istringstream no_header("");
  CHECK_THROWS_AS(nj::read_voxels(no_header), ParseError);
}

TEST_CASE("read_voxels: binary") {
  std::string data = R"({"dim": 3, "resolution": 8, "encoding": "binary"})";
  data += '\n';
  for (std::uint32_t x : {1u, 2u, 3u, 7u, 0u, 5u}) {
    for (int b = 0; b < 4; ++b) data += static_cast<char>((x >> (8 * b)) & 0xff);
  }
  std::istringstream in(data);
  const VoxelSet v = nj::read_voxels(in);
  CHECK(v.occupied_count() == 2);
  CHECK(v.contains({1, 2, 3}));
  CHECK(v.contains({7, 0, 5}));

  std::istringstream truncated(data.substr(0, data.size() - 2));
  CHECK_THROWS_AS(nj::read_voxels(truncated), ParseError);
}
