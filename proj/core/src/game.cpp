#include "nobeling/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nobeling/errors.hpp"

namespace nobeling {

namespace {

void require_distinct(const std::vector<Point>& pts, const char* what) {
  std::set<Point> seen(pts.begin(), pts.end());
  if (seen.size() != pts.size()) throw std::invalid_argument(std::string(what) + " are not pairwise distinct");
}

}  // namespace

void RunConfig::validate() const {
  if (dim < 4) throw std::invalid_argument("dim must be at least 4");
  if (samples.empty()) throw std::invalid_argument("no samples");
  for (const Point& p : samples) require_same_dim(p, dim);
  require_distinct(samples, "samples");
  if (global_eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  // The straightening target is 2 * clearance_fraction * cylinder radius.
  if (clearance_fraction.sign() <= 0 || clearance_fraction >= Scalar(1, 2)) {
    throw std::invalid_argument("clearance fraction must lie in (0, 1/2)");
  }
}

EmbeddingState::EmbeddingState(std::vector<Point> domain)
    : domain_(std::move(domain)), initial_(domain_), images_(domain_) {
  require_distinct(domain_, "domain samples");
}

EmbeddingState::EmbeddingState(std::vector<Point> domain, std::vector<Point> initial_images)
    : domain_(std::move(domain)), initial_(std::move(initial_images)), images_(initial_) {
  if (domain_.size() != initial_.size()) throw std::invalid_argument("one image per domain sample");
  require_distinct(domain_, "domain samples");
  require_distinct(initial_, "initial images");
}

std::optional<Scalar> min_gap_at_scale(const std::vector<Point>& domain,
                                       const std::vector<Point>& images, int k) {
  const Scalar scale = Scalar::pow2(-k);
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (dist(domain[i], domain[j]) < scale) continue;
      Scalar g = dist(images[i], images[j]);
      if (!best || g < *best) best = std::move(g);
    }
  }
  return best;
}

Scalar delta_k(const EmbeddingState& state, int k) {
  if (k != state.round() + 1) {
    throw std::invalid_argument("delta_k for round " + std::to_string(k) + " requested at round " +
                                std::to_string(state.round()));
  }
  return min_gap_at_scale(state.domain_samples(), state.images(), k).value_or(Scalar(1));
}

Scalar epsilon_k(const Scalar& delta, int k, const Scalar& budget_scale) {
  if (delta.sign() <= 0 || budget_scale.sign() <= 0) {
    throw std::invalid_argument("epsilon_k needs delta > 0 and budget_scale > 0");
  }
  return budget_scale * Scalar::pow2(-k) * min(Scalar(1), delta);
}

Scalar budget_scale(const Scalar& global_eps) { return min(global_eps, Scalar(1)) / 2; }

Scalar constant_C(int terms) {
  if (terms < 1) throw std::invalid_argument("constant_C needs at least one term");
  Scalar c = 1;
  for (int m = 1; m <= terms; ++m) c *= 1 - Scalar::pow2(-m);
  return c;
}

EmbeddingState play_round(const EmbeddingState& state, const AxisLine& line, const RunConfig& cfg) {
  if (line.dim() != cfg.dim) throw DimensionError("line dimension differs from the run dimension");
  const int k = state.round() + 1;
  const Scalar delta = delta_k(state, k);
  Scalar eps = epsilon_k(delta, k, budget_scale(cfg.global_eps));
  // Later rounds may not undo earlier clearances: the tail of tolerances
  // after round i stays below half of round i's clearance.
  for (const RoundRecord& r : state.history()) {
    eps = min(eps, r.clearance * Scalar::pow2(r.k - k - 1));
  }

  const std::vector<Point>& before = state.images();
  const Scalar clearance = cfg.clearance_fraction * eps / 4;
  MoveMap straight;
  try {
    straight = straighten(before, line, eps / 2, clearance);
  } catch (const InfeasibleError& e) {
    throw InfeasibleError("round " + std::to_string(k) + ": " + e.what() +
                          " (clearance fraction " + cfg.clearance_fraction.str() +
                          " must be below 1/2)");
  }
  const MoveMap push = push_away(line, clearance * cfg.clearance_fraction);
  MoveMap move = compose(push, straight, before);

  std::vector<Point> after;
  after.reserve(before.size());
  for (const Point& p : before) after.push_back(move.forward(p));

  // Player II's rules: eps-close to the identity, with an inverse-modulus
  // witness, and exactly invertible on the working set.
  if (eps < move.displacement_bound()) throw std::logic_error("round move exceeds its tolerance");
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (eps < dist(before[i], after[i])) throw std::logic_error("sample displaced beyond tolerance");
    if (move.inverse(after[i]) != before[i]) throw std::logic_error("round move is not invertible");
  }
  require_distinct(after, "images");

  // d(f_k x, f_k x') >= (1 - 2^(1-k)) d(f_{k-1} x, f_{k-1} x') for pairs at scale 2^-k.
  const Scalar factor = 1 - Scalar::pow2(1 - k);
  const Scalar scale = Scalar::pow2(-k);
  const auto& domain = state.domain_samples();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (dist(domain[i], domain[j]) < scale) continue;
      if (dist(after[i], after[j]) < factor * dist(before[i], before[j])) {
        throw std::logic_error("per-round contraction bound violated");
      }
    }
  }

  RoundRecord rec;
  rec.k = k;
  rec.eps = eps;
  rec.delta = delta;
  rec.line_index = index_of_line(line);
  rec.line = line;
  rec.gap_before = min_gap_at_scale(domain, before, k);
  rec.gap_after = min_gap_at_scale(domain, after, k);
  if (rec.gap_before && *rec.gap_after < factor * *rec.gap_before) {
    throw std::logic_error("per-round min-gap bound violated");
  }
  rec.clearance = dist_point_line(after.front(), line);
  for (const Point& p : after) rec.clearance = min(rec.clearance, dist_point_line(p, line));
  if (rec.clearance.sign() <= 0) throw std::logic_error("image still meets the round's line");
  rec.move = std::move(move);

  EmbeddingState next = state;
  next.images_ = std::move(after);
  next.history_.push_back(std::move(rec));
  return next;
}

Certificate make_certificate(const EmbeddingState& state, const Scalar& global_eps) {
  Certificate cert;
  cert.dim = state.domain_samples().front().dim();
  cert.sample_count = state.domain_samples().size();
  cert.global_eps = global_eps;
  cert.c_terms = std::max(1, state.round());
  cert.injectivity_constant = constant_C(cert.c_terms);
  for (const RoundRecord& r : state.history()) {
    cert.epsilon_budget += r.eps;
    cert.rounds.push_back({r.k, r.eps, r.delta, r.line_index, r.clearance});
    cert.per_scale_bounds.push_back(
        {r.k, r.delta, min_gap_at_scale(state.domain_samples(), state.images(), r.k)});
    cert.line_clearances.emplace_back(r.line_index, r.clearance);
  }
  return cert;
}

std::vector<std::string> verify_certificate(const EmbeddingState& state, const Certificate& cert) {
  std::vector<std::string> bad;
  const auto& domain = state.domain_samples();
  const auto& images = state.images();

  if (!(cert.epsilon_budget < cert.global_eps)) bad.push_back("epsilon budget is not below eps");
  Scalar sum;
  for (const auto& r : cert.rounds) sum += r.eps;
  if (sum != cert.epsilon_budget) bad.push_back("epsilon budget differs from the sum of round tolerances");
  if (cert.injectivity_constant != constant_C(cert.c_terms)) bad.push_back("C_partial is not the exact partial product");

  for (const auto& r : cert.rounds) {
    if (r.clearance.sign() <= 0) bad.push_back("round " + std::to_string(r.k) + ": clearance not positive");
  }
  for (const auto& sb : cert.per_scale_bounds) {
    const Scalar scale = Scalar::pow2(-sb.k);
    const Scalar floor = cert.injectivity_constant * sb.delta;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (std::size_t j = i + 1; j < domain.size(); ++j) {
        if (dist(domain[i], domain[j]) < scale) continue;
        if (dist(images[i], images[j]) < floor) {
          bad.push_back("scale " + std::to_string(sb.k) + ": image gap below C * delta");
        }
      }
    }
  }

  // Replay: images are the recorded moves applied to the initial images, and
  // every earlier line keeps at least half its clearance.
  std::vector<Point> replay = state.initial_images();
  for (const RoundRecord& r : state.history()) {
    for (Point& p : replay) p = r.move.forward(p);
  }
  if (replay != images) bad.push_back("images differ from the replayed moves");
  for (const RoundRecord& r : state.history()) {
    for (const Point& p : images) {
      if (2 * dist_point_line(p, r.line) < r.clearance) {
        bad.push_back("round " + std::to_string(r.k) + ": clearance not persistent");
        break;
      }
    }
  }
  if (std::set<Point>(images.begin(), images.end()).size() != images.size()) {
    bad.push_back("images are not pairwise distinct");
  }
  return bad;
}

std::pair<EmbeddingState, Certificate> run(const RunConfig& cfg) {
  cfg.validate();
  EmbeddingState state(cfg.samples);
  for (int i = 1; i <= cfg.rounds; ++i) {
    state = play_round(state, nth_line(cfg.dim, LineIndex(static_cast<unsigned long>(i))), cfg);
  }
  Certificate cert = make_certificate(state, cfg.global_eps);
  if (auto bad = verify_certificate(state, cert); !bad.empty()) {
    throw std::logic_error("certificate check failed: " + bad.front());
  }
  return {std::move(state), std::move(cert)};
}

}  // namespace nobeling
