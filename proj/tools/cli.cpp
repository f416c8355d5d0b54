#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "nobeling/nobeling.hpp"

namespace nobeling::cli {

namespace {

// Bad flags or values; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(flag + ": expected an exact rational \"num/den\", got '" + text + "'");
  }
}

// Opens `path` for writing, or falls back to `fallback` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
      out_ = file_.get();
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

struct RunOptions {
  std::size_t dim = 4;
  int rounds = 3;
  std::string eps = "1/10";
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  long height = 8;
  std::string clearance_fraction = "1/4";
  std::string certificate;
  std::string trajectory;
  std::string moves;
  unsigned precision = 12;
};

void write_trajectory(const EmbeddingState& state, unsigned precision, std::ostream& os) {
  const std::size_t n = state.domain_samples().front().dim();
  os << "# lossy: exact rationals truncated to " << precision << " decimal digits\n";
  os << "round,sample_id";
  for (std::size_t i = 0; i < n; ++i) os << ",coord_" << i;
  os << '\n';
  std::vector<Point> images = state.initial_images();
  auto emit = [&](int round) {
    for (std::size_t s = 0; s < images.size(); ++s) {
      os << round << ',' << s;
      for (const Scalar& c : images[s].coords()) os << ',' << c.to_decimal(precision);
      os << '\n';
    }
  };
  emit(0);
  for (const RoundRecord& r : state.history()) {
    for (Point& p : images) p = r.move.forward(p);
    emit(r.k);
  }
}

int do_run(const RunOptions& o, std::ostream& out) {
  RunConfig cfg;
  cfg.dim = o.dim;
  if (cfg.dim < 4) throw ConfigError("--dim must be at least 4 (the straightening move needs n > 3)");
  cfg.rounds = o.rounds;
  if (cfg.rounds < 1) throw ConfigError("--rounds must be at least 1");
  cfg.global_eps = parse_rational("--eps", o.eps);
  if (cfg.global_eps.sign() <= 0) throw ConfigError("--eps must be positive");
  cfg.clearance_fraction = parse_rational("--clearance-fraction", o.clearance_fraction);
  if (cfg.clearance_fraction.sign() <= 0 || cfg.clearance_fraction >= Scalar(1, 2)) {
    throw ConfigError("--clearance-fraction must lie in (0, 1/2)");
  }
  if (o.samples < 1) throw ConfigError("--samples must be at least 1");
  if (o.height < 1) throw ConfigError("--height must be at least 1");
  cfg.samples = game_fixture(cfg.dim, o.samples, o.seed, o.height);

  auto [state, cert] = run(cfg);

  Sink cert_sink(o.certificate, out);
  cert_sink.stream() << json::to_json(cert).dump(2) << '\n';
  if (!o.trajectory.empty()) {
    Sink traj(o.trajectory, out);
    write_trajectory(state, o.precision, traj.stream());
  }
  if (!o.moves.empty()) {
    Sink moves(o.moves, out);
    json::Json doc = json::Json::array();
    for (const RoundRecord& r : state.history()) {
      doc.push_back(json::Json{{"k", r.k}, {"line", json::to_json(r.line)}, {"move", json::to_json(r.move)}});
    }
    moves.stream() << doc.dump(2) << '\n';
  }
  return kOk;
}

int do_lines(std::size_t dim, unsigned long count, unsigned long start, std::ostream& out) {
  if (dim < 2) throw ConfigError("--dim must be at least 2");
  for (unsigned long i = start; i < start + count; ++i) {
    out << json::to_json(nth_line(dim, LineIndex(i))).dump() << '\n';
  }
  return kOk;
}

int do_move_eval(const std::string& map_path, const std::string& points_path, bool inverse,
                 std::ostream& out, std::istream& in) {
  std::ifstream map_file(map_path);
  if (!map_file) throw ConfigError("--map: cannot open '" + map_path + "'");
  const MoveMap move = json::move_from_json(json::Json::parse(map_file));

  std::ifstream points_file;
  std::istream* src = &in;
  if (!points_path.empty() && points_path != "-") {
    points_file.open(points_path);
    if (!points_file) throw ConfigError("--points: cannot open '" + points_path + "'");
    src = &points_file;
  }
  std::string line;
  while (std::getline(*src, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Point p = json::point_from_json(json::Json::parse(line));
    out << json::to_json(inverse ? move.inverse(p) : move.forward(p)).dump() << '\n';
  }
  return kOk;
}

int do_codim(const std::string& input, const std::string& windows, std::ostream& out) {
  std::ifstream file(input, std::ios::binary);
  if (!file) throw ConfigError("--input: cannot open '" + input + "'");
  const VoxelSet v = json::read_voxels(file);
  std::vector<Window> ws;
  if (windows == "octants") {
    ws = octant_windows(v.dim(), v.resolution());
  } else if (windows == "full") {
    ws.push_back({Cell(v.dim(), 0), Cell(v.dim(), v.resolution())});
  } else {
    throw ConfigError("--windows must be 'octants' or 'full'");
  }
  out << json::to_json(classify(v, ws)).dump(2) << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Exact finite-sample embedding game in R^n with certificates", "nobeling"};
  app.require_subcommand(1);

  RunOptions ro;
  auto* run_cmd = app.add_subcommand("run", "play the perturbation game and emit a certificate");
  run_cmd->add_option("--dim", ro.dim, "ambient dimension n (>= 4)");
  run_cmd->add_option("--rounds", ro.rounds, "number of rounds K");
  run_cmd->add_option("--eps", ro.eps, "global tolerance as num/den");
  run_cmd->add_option("--seed", ro.seed, "fixture seed");
  run_cmd->add_option("--samples", ro.samples, "number of samples");
  run_cmd->add_option("--height", ro.height, "max numerator/denominator of sample coordinates");
  run_cmd->add_option("--clearance-fraction", ro.clearance_fraction, "clearance fraction as num/den, below 1/2");
  run_cmd->add_option("--certificate", ro.certificate, "certificate JSON path (default stdout)");
  run_cmd->add_option("--trajectory", ro.trajectory, "per-round image CSV path");
  run_cmd->add_option("--precision", ro.precision, "decimal digits in the trajectory CSV");
  run_cmd->add_option("--moves", ro.moves, "replayable move JSON path");

  std::size_t lines_dim = 4;
  unsigned long lines_count = 10;
  unsigned long lines_start = 0;
  auto* lines_cmd = app.add_subcommand("lines", "print enumerated rational lines as JSON lines");
  lines_cmd->add_option("--dim", lines_dim, "ambient dimension n (>= 2)");
  lines_cmd->add_option("--count", lines_count, "number of lines");
  lines_cmd->add_option("--start", lines_start, "first index");

  std::string map_path;
  std::string points_path;
  bool inverse = false;
  auto add_eval_options = [&](CLI::App* cmd) {
    cmd->add_option("--map", map_path, "serialized move JSON")->required();
    cmd->add_option("--points", points_path, "JSON-lines points (default stdin)");
    cmd->add_flag("--inverse", inverse, "apply the inverse map");
  };
  auto* move_cmd = app.add_subcommand("move", "operations on serialized moves");
  move_cmd->require_subcommand(1);
  auto* eval_cmd = move_cmd->add_subcommand("eval", "apply a move to a stream of points");
  add_eval_options(eval_cmd);
  auto* move_eval_cmd = app.add_subcommand("move-eval", "same as 'move eval'");
  add_eval_options(move_eval_cmd);

  std::string codim_input;
  std::string codim_windows = "octants";
  auto* codim_cmd = app.add_subcommand("codim", "grid-scale codimension evidence for a voxel set");
  codim_cmd->add_option("--input", codim_input, "voxel file")->required();
  codim_cmd->add_option("--windows", codim_windows, "window family: octants | full");

  int c_terms = 64;
  unsigned c_digits = 0;
  auto* c_cmd = app.add_subcommand("constant-c", "exact partial product prod (1 - 2^-m)");
  c_cmd->add_option("--terms", c_terms, "number of factors");
  c_cmd->add_option("--decimal", c_digits, "also print this many decimal digits");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (run_cmd->parsed()) return do_run(ro, out);
    if (lines_cmd->parsed()) return do_lines(lines_dim, lines_count, lines_start, out);
    if (eval_cmd->parsed() || move_eval_cmd->parsed()) {
      return do_move_eval(map_path, points_path, inverse, out, in);
    }
    if (codim_cmd->parsed()) return do_codim(codim_input, codim_windows, out);
    if (c_cmd->parsed()) {
      if (c_terms < 1) throw ConfigError("--terms must be at least 1");
      const Scalar c = constant_C(c_terms);
      out << c.str() << '\n';
      if (c_digits > 0) out << c.to_decimal(c_digits) << '\n';
      return kOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kConfigError;
}

}  // namespace nobeling::cli
