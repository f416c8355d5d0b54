#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "nobeling/serialize.hpp"

namespace fs = std::filesystem;
namespace nj = nobeling::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = nobeling::cli::run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nobeling_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("constant-c") {
  CHECK(call({"constant-c", "--terms", "3"}).out == "21/64\n");
  const Result r = call({"constant-c", "--terms", "64", "--decimal", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n0.288788") != std::string::npos);
  CHECK(call({"constant-c", "--terms", "0"}).code == 2);
}

TEST_CASE("config errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"run", "--bogus"}).code == 2);
  CHECK(call({"run", "--dim", "3"}).code == 2);
  CHECK(call({"run", "--eps", "0.1"}).code == 2);
  CHECK(call({"run", "--eps", "-1/10"}).code == 2);
  CHECK(call({"run", "--clearance-fraction", "3/2"}).code == 2);
  CHECK(call({"codim"}).code == 2);
  CHECK(call({"codim", "--input", scratch("missing.jsonl").string()}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("runtime errors exit 1") {
  // Push away evaluated on its own line.
  const fs::path map = scratch("push.json");
  std::ofstream(map) << nj::to_json(nobeling::push_away(nobeling::AxisLine(0, {0, 0, 0}), 1)).dump();
  const Result r = call({"move-eval", "--map", map.string()}, "[\"5/1\",\"0/1\",\"0/1\",\"0/1\"]\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("undefined on its line") != std::string::npos);
  CHECK(call({"run", "--clearance-fraction", "1/2"}).code == 2);
}

TEST_CASE("lines") {
  const Result r = call({"lines", "--dim", "4", "--count", "3"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    const auto l = nj::line_from_json(nj::Json::parse(line));
    CHECK(l == nobeling::nth_line(4, nobeling::LineIndex(static_cast<unsigned long>(n))));
    ++n;
  }
  CHECK(n == 3);
}

TEST_CASE("run emits a schema-valid certificate") {
  const fs::path cert = scratch("cert.json"), traj = scratch("traj.csv"), moves = scratch("moves.json");
  const Result r = call({"run", "--dim", "4", "--rounds", "3", "--eps", "1/10", "--seed", "7", "--certificate",
                         cert.string(), "--trajectory", traj.string(), "--moves", moves.string()});
  REQUIRE(r.code == 0);
  const nj::Json j = nj::Json::parse(slurp(cert));
  CHECK(nj::validate_certificate(j).empty());
  REQUIRE(j["rounds"].size() == 3);
  for (const auto& round : j["rounds"]) CHECK(nj::scalar_from_json(round["clearance"]) > 0);

  const std::string csv = slurp(traj);
  CHECK(csv.rfind("# lossy", 0) == 0);
  CHECK(csv.find("round,sample_id,coord_0,coord_1,coord_2,coord_3\n") != std::string::npos);

  // Replay round 1 through `move eval` and compare with trajectory round 1.
  const nj::Json doc = nj::Json::parse(slurp(moves));
  REQUIRE(doc.size() == 3);
  const fs::path map = scratch("map.json");
  std::ofstream(map) << doc[0]["move"].dump();
  const Result ev = call({"move", "eval", "--map", map.string()}, "[\"0/1\",\"0/1\",\"0/1\",\"5/1\"]\n");
  CHECK(ev.code == 0);
  CHECK(nj::point_from_json(nj::Json::parse(ev.out)).dim() == 4);
  const Result inv =
      call({"move-eval", "--map", map.string(), "--inverse"}, ev.out);
  CHECK(inv.out == "[\"0/1\",\"0/1\",\"0/1\",\"5/1\"]\n");
}

TEST_CASE("same seed, byte-identical output") {
  const std::vector<std::string> args{"run", "--dim", "4", "--rounds", "3", "--eps", "1/10", "--seed", "42"};
  const Result a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto other = args;
  other.back() = "43";
  CHECK(call(other).out != a.out);
}

TEST_CASE("codim") {
  const fs::path input = scratch("slab.jsonl");
  {
    std::ofstream f(input);
    f << R"({"dim": 2, "resolution": 4})" << '\n';
    for (int i = 0; i < 4; ++i) f << "[2, " << i << "]\n";
  }
  const Result r = call({"codim", "--input", input.string(), "--windows", "octants"});
  REQUIRE(r.code == 0);
  const nj::Json j = nj::Json::parse(r.out);
  CHECK(j["verdict"] == nobeling::to_string(nobeling::Verdict::kCodimAtLeast1Only));
  CHECK(call({"codim", "--input", input.string(), "--windows", "spheres"}).code == 2);
}
