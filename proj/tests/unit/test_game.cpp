#include <doctest.h>

#include "nobeling/errors.hpp"
#include "nobeling/fixtures.hpp"
#include "nobeling/game.hpp"
#include "oracles.hpp"

using namespace nobeling;

TEST_CASE("delta_k examples") {
  // Domain gap 1, image gap 3/10.
  const std::vector<Point> domain{Point{0, 0, 0, 0}, Point{1, 0, 0, 0}};
  const std::vector<Point> images{Point{0, 0, 0, 0}, Point{Scalar(3, 10), 0, 0, 0}};
  const EmbeddingState s(domain, images);
  CHECK(delta_k(s, 1) == Scalar(3, 10));
  CHECK_THROWS_AS(delta_k(s, 2), std::invalid_argument);

  const EmbeddingState close(std::vector<Point>{Point{0, 0, 0, 0}, Point{Scalar(1, 8), 0, 0, 0}});
  CHECK(delta_k(close, 1) == 1);  // 1/8 < 1/2: no qualifying pair

  const EmbeddingState single(std::vector<Point>{Point{0, 0, 0, 0}});
  CHECK(delta_k(single, 1) == 1);
}

TEST_CASE("delta_k is a valid modulus witness") {
  FixtureRng rng(5);
  for (int it = 0; it < 50; ++it) {
    const auto domain = game_fixture(4, 8, rng.next(), 4);
    std::vector<Point> images;
    for (const Point& p : domain) images.push_back(Scalar(1, rng.uniform(1, 5)) * p);
    const EmbeddingState s(domain, images);
    const Scalar d = delta_k(s, 1);
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (std::size_t j = i + 1; j < domain.size(); ++j) {
        if (dist(images[i], images[j]) < d) CHECK(dist(domain[i], domain[j]) < Scalar(1, 2));
      }
    }
  }
}

TEST_CASE("epsilon_k examples") {
  CHECK(epsilon_k(Scalar(2), 1, Scalar(1)) == Scalar(1, 2));
  CHECK(epsilon_k(Scalar(1, 4), 2, Scalar(1)) == Scalar(1, 16));
  CHECK_THROWS_AS(epsilon_k(Scalar(1), 1, Scalar(0)), std::invalid_argument);
  CHECK(budget_scale(Scalar(1, 10)) == Scalar(1, 20));
  CHECK(budget_scale(Scalar(5)) == Scalar(1, 2));
}

TEST_CASE("constant_C") {
  CHECK(constant_C(1) == Scalar(1, 2));
  CHECK(constant_C(3) == Scalar(21, 64));
  CHECK_THROWS(constant_C(0));
  const Scalar c64 = constant_C(64);
  CHECK(Scalar::parse("2887880/10000000") < c64);
  CHECK(c64 < Scalar::parse("2887881/10000000"));
  CHECK(c64.to_double() == doctest::Approx(oracle::constant_c_float(64)).epsilon(1e-12));
  for (int t = 1; t < 64; ++t) CHECK(constant_C(t + 1) < constant_C(t));
}

TEST_CASE("play_round: samples far from the line") {
  RunConfig cfg;
  cfg.samples = {Point{0, 5, 5, 5}, Point{1, -5, 5, 5}};
  const EmbeddingState s0(cfg.samples);
  const AxisLine line(0, {Scalar(0), Scalar(0), Scalar(0)});
  const EmbeddingState s1 = play_round(s0, line, cfg);
  CHECK(s1.images() == s0.images());
  CHECK(s1.round() == 1);
  CHECK(s1.history()[0].line_index == index_of_line(line));
  CHECK(s1.history()[0].clearance == 5);
}

TEST_CASE("play_round: one sample on the line") {
  RunConfig cfg;
  cfg.samples = {Point{Scalar(1, 3), 0, 0, 0}, Point{0, 1, 1, 1}};
  const AxisLine line(0, {Scalar(0), Scalar(0), Scalar(0)});
  const EmbeddingState s1 = play_round(EmbeddingState(cfg.samples), line, cfg);
  const RoundRecord& r = s1.history()[0];
  // delta = 1, eps = (1/20) * (1/2) * 1.
  CHECK(r.delta == 1);
  CHECK(r.eps == Scalar(1, 40));
  CHECK(r.clearance > 0);
  CHECK(dist_point_line(s1.images()[0], line) >= cfg.clearance_fraction * r.eps / 4);
  CHECK(dist(s1.images()[0], cfg.samples[0]) < r.eps);
  CHECK(s1.images()[1] == cfg.samples[1]);
}

TEST_CASE("play_round errors") {
  RunConfig cfg;
  cfg.samples = {Point{0, 0, 0, 0}};
  const EmbeddingState s(cfg.samples);
  CHECK_THROWS_AS(play_round(s, AxisLine(0, {Scalar(0), Scalar(0)}), cfg), DimensionError);
  cfg.clearance_fraction = Scalar(1);
  CHECK_THROWS_AS(play_round(s, AxisLine(0, {Scalar(0), Scalar(0), Scalar(0)}), cfg), std::exception);
}

TEST_CASE("RunConfig validation") {
  RunConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // no samples
  cfg.samples = {Point{0, 0, 0, 0}, Point{0, 0, 0, 0}};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // duplicates
  cfg.samples = {Point{0, 0, 0, 0}};
  CHECK_NOTHROW(cfg.validate());
  cfg.global_eps = Scalar(0);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.global_eps = Scalar(1, 10);
  cfg.dim = 3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("run: K = 3 on five random samples") {
  RunConfig cfg;
  cfg.samples = game_fixture(4, 5, 11, 8);
  cfg.rounds = 3;
  const auto [state, cert] = run(cfg);
  CHECK(state.round() == 3);
  CHECK(cert.rounds.size() == 3);
  for (const auto& r : cert.rounds) CHECK(r.clearance > 0);
  CHECK(cert.epsilon_budget < cfg.global_eps);
  CHECK(cert.injectivity_constant == constant_C(3));
  CHECK(verify_certificate(state, cert).empty());
  for (std::size_t i = 0; i < cfg.samples.size(); ++i) {
    CHECK(dist(state.images()[i], cfg.samples[i]) < cfg.global_eps);
  }
}

TEST_CASE("run: K = 1 with samples away from the first line") {
  RunConfig cfg;
  const AxisLine l1 = nth_line(4, LineIndex(1));
  cfg.samples = {l1.at(0) + Point{0, 3, 3, 3}, l1.at(1) + Point{0, -3, 3, 3}};
  cfg.samples[0][l1.free_axis()] = 0;
  cfg.samples[1][l1.free_axis()] = 1;
  const auto [state, cert] = run(cfg);
  CHECK(state.images() == cfg.samples);
}

TEST_CASE("run invariants on random fixtures") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    RunConfig cfg;
    cfg.samples = game_fixture(4, 5 + seed % 4, seed, 8);
    cfg.rounds = 4;
    const auto [state, cert] = run(cfg);
    CHECK(verify_certificate(state, cert).empty());

    // Clearance persistence and distinctness after every round, by replay.
    std::vector<Point> cur = cfg.samples;
    for (const RoundRecord& r : state.history()) {
      for (Point& p : cur) p = r.move.forward(p);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) CHECK(cur[i] != cur[j]);
      }
      for (const RoundRecord& earlier : state.history()) {
        if (earlier.k > r.k) break;
        for (const Point& p : cur) CHECK(2 * dist_point_line(p, earlier.line) >= earlier.clearance);
      }
      // Per-round contraction factor.
      if (r.gap_before) CHECK(*r.gap_after >= (1 - Scalar::pow2(1 - r.k)) * *r.gap_before);
    }
    CHECK(cur == state.images());

    // Sum of tolerances bounds total displacement.
    for (std::size_t i = 0; i < cur.size(); ++i) CHECK(dist(cur[i], cfg.samples[i]) <= cert.epsilon_budget);
  }
}

TEST_CASE("run is deterministic") {
  RunConfig cfg;
  cfg.samples = game_fixture(4, 6, 99, 8);
  cfg.rounds = 3;
  const auto a = run(cfg), b = run(cfg);
  CHECK(a.first.images() == b.first.images());
  REQUIRE(a.second.rounds.size() == b.second.rounds.size());
  for (std::size_t i = 0; i < a.second.rounds.size(); ++i) {
    CHECK(a.second.rounds[i].eps == b.second.rounds[i].eps);
    CHECK(a.second.rounds[i].clearance == b.second.rounds[i].clearance);
  }
}

TEST_CASE("tampered certificates are rejected") {
  RunConfig cfg;
  cfg.samples = game_fixture(4, 5, 3, 8);
  cfg.rounds = 2;
  const auto [state, cert] = run(cfg);
  Certificate bad = cert;
  bad.epsilon_budget = cfg.global_eps;
  CHECK_FALSE(verify_certificate(state, bad).empty());
  bad = cert;
  bad.injectivity_constant = Scalar(1);
  CHECK_FALSE(verify_certificate(state, bad).empty());
  bad = cert;
  bad.per_scale_bounds[0].delta = Scalar(1000);
  CHECK_FALSE(verify_certificate(state, bad).empty());
}
