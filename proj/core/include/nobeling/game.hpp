#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nobeling/geometry.hpp"
#include "nobeling/lines.hpp"
#include "nobeling/moves.hpp"

namespace nobeling {

struct RunConfig {
  std::size_t dim = 4;
  std::vector<Point> samples;
  Scalar global_eps{1, 10};
  int rounds = 1;
  Scalar clearance_fraction{1, 4};

  /// Throws std::invalid_argument describing the first violated requirement.
  void validate() const;
};

/// One round of the game: Player I's tolerance and Player II's move.
struct RoundRecord {
  int k = 0;
  Scalar eps;                       // tolerance actually played
  Scalar delta;                     // modulus witness for scale 2^-k
  LineIndex line_index;
  AxisLine line{0, {Scalar(0)}};
  MoveMap move;                     // straighten, then push away
  Scalar clearance;                 // min distance of the new images to `line`
  std::optional<Scalar> gap_before;  // min image gap over pairs with domain gap >= 2^-k
  std::optional<Scalar> gap_after;
};

/// A finite embedding f_k : X -> R^n, stored as the image of every sample.
class EmbeddingState {
 public:
  /// Starts the game from the identity embedding.
  explicit EmbeddingState(std::vector<Point> domain);
  /// Starts the game from an arbitrary injective initial embedding.
  EmbeddingState(std::vector<Point> domain, std::vector<Point> initial_images);

  const std::vector<Point>& domain_samples() const { return domain_; }
  const std::vector<Point>& initial_images() const { return initial_; }
  const std::vector<Point>& images() const { return images_; }
  const std::vector<RoundRecord>& history() const { return history_; }
  int round() const { return static_cast<int>(history_.size()); }

 private:
  friend EmbeddingState play_round(const EmbeddingState&, const AxisLine&, const RunConfig&);

  std::vector<Point> domain_;
  std::vector<Point> initial_;
  std::vector<Point> images_;
  std::vector<RoundRecord> history_;
};

/// Smallest image gap among sample pairs whose domain gap is >= 2^-k, or
/// none when no pair qualifies.
std::optional<Scalar> min_gap_at_scale(const std::vector<Point>& domain,
                                       const std::vector<Point>& images, int k);

/// Largest threshold such that image gaps below it force domain gaps below
/// 2^-k, for the embedding at round k-1. Equals 1 when no pair qualifies.
Scalar delta_k(const EmbeddingState& state, int k);

/// budget_scale * 2^-k * min(1, delta).
Scalar epsilon_k(const Scalar& delta, int k, const Scalar& budget_scale);

/// min(global_eps, 1) / 2; keeps sum eps_k below global_eps and each round's
/// contraction factor at least 1 - 2^-k.
Scalar budget_scale(const Scalar& global_eps);

/// Exact partial product prod_{m=1}^{terms} (1 - 2^-m).
Scalar constant_C(int terms);

/// Plays round state.round() + 1 against `line`. Throws InfeasibleError when
/// the configuration cannot meet the clearance, std::logic_error when a rule
/// of the game is violated (never expected).
EmbeddingState play_round(const EmbeddingState& state, const AxisLine& line,
                          const RunConfig& cfg);

struct Certificate {
  struct Round {
    int k;
    Scalar eps;
    Scalar delta;
    LineIndex line_index;
    Scalar clearance;
  };
  struct ScaleBound {
    int k;
    Scalar delta;
    std::optional<Scalar> min_gap;  // final image gap over pairs qualifying at 2^-k
  };

  std::size_t dim = 0;
  std::size_t sample_count = 0;
  Scalar global_eps;
  Scalar epsilon_budget;
  int c_terms = 0;
  Scalar injectivity_constant;
  std::vector<Round> rounds;
  std::vector<ScaleBound> per_scale_bounds;
  std::vector<std::pair<LineIndex, Scalar>> line_clearances;
};

Certificate make_certificate(const EmbeddingState& state, const Scalar& global_eps);

/// Re-checks every certified inequality against the state, exactly. Returns
/// one message per violation; empty means the certificate holds.
std::vector<std::string> verify_certificate(const EmbeddingState& state, const Certificate& cert);

/// Plays rounds 1..K against nth_line(dim, 1..K).
std::pair<EmbeddingState, Certificate> run(const RunConfig& cfg);

}  // namespace nobeling
