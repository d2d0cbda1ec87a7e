#include <cmath>
#include <random>

#include <doctest.h>

#include "fuzzcast/center_learning.hpp"
#include "support/oracles.hpp"

using namespace fuzzcast;

namespace {

Eigen::VectorXd vec1(double a) {
  Eigen::VectorXd v(1);
  v << a;
  return v;
}

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

CenterRuleConfig kohonen_config(double beta, double accumulator_init = 1.0) {
  CenterRuleConfig config;
  config.rule = CenterStepRule::Kohonen;
  config.beta = beta;
  config.accumulator_init = accumulator_init;
  return config;
}

}  // namespace

TEST_SUITE("center-learning") {

TEST_CASE("initial centers are evenly spaced over [-1, 1]") {
  SUBCASE("five centers land on the half grid exactly") {
    const MembershipGrid grid = init_centers(ModelConfig{2, 5, 0.5});
    const double expected[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int l = 0; l < 5; ++l) {
      CHECK(grid.centers(l, 0) == expected[l]);
      CHECK(grid.centers(l, 1) == expected[l]);
    }
  }
  SUBCASE("two centers sit on the endpoints") {
    const MembershipGrid grid = init_centers(ModelConfig{1, 2, 1.0});
    CHECK(grid.centers(0, 0) == -1.0);
    CHECK(grid.centers(1, 0) == 1.0);
  }
  SUBCASE("three centers include the midpoint") {
    const MembershipGrid grid = init_centers(ModelConfig{1, 3, 1.0});
    CHECK(grid.centers(0, 0) == -1.0);
    CHECK(grid.centers(1, 0) == 0.0);
    CHECK(grid.centers(2, 0) == 1.0);
  }
  SUBCASE("fewer than two centers is a configuration error") {
    CHECK_THROWS_AS(init_centers(ModelConfig{1, 1, 0.5}), ValidationError);
  }
  SUBCASE("non-representable spacings still land inside [-1, 1]") {
    for (int h : {4, 7, 9, 23}) {
      const MembershipGrid grid = init_centers(ModelConfig{1, h, 0.5});
      CHECK(grid.centers(0, 0) == -1.0);
      CHECK(grid.centers(h - 1, 0) == 1.0);
      for (int l = 0; l < h; ++l) {
        CHECK(std::abs(grid.centers(l, 0)) <= 1.0);
        if (l > 0) CHECK(grid.centers(l, 0) > grid.centers(l - 1, 0));
      }
    }
  }
}

TEST_CASE("find_winners picks the nearest center per axis") {
  const MembershipGrid grid = init_centers(ModelConfig{2, 5, 0.5});

  SUBCASE("an exact center hit wins") {
    const auto winners = find_winners(vec2(-0.5, 1.0), grid);
    CHECK(winners[0] == 1);
    CHECK(winners[1] == 4);
  }
  SUBCASE("nearest grid point wins on each axis independently") {
    const auto winners = find_winners(vec2(0.3, -0.8), grid);
    CHECK(winners[0] == 3);  // 0.5 at distance 0.2
    CHECK(winners[1] == 0);  // -1.0 at distance 0.2
  }
  SUBCASE("midway ties go to the lower rule index") {
    const auto winners = find_winners(vec1(0.25), init_centers(ModelConfig{1, 5, 0.5}));
    CHECK(winners[0] == 2);  // 0.0 and 0.5 tie, center 0.0 has the lower index
  }
}

TEST_CASE("update_centers moves exactly the winners") {
  ModelConfig config{2, 5, 0.5};
  MembershipGrid grid = init_centers(config);
  CenterLearnerState state = make_center_state(config, CenterRuleConfig{});

  const Eigen::MatrixXd before = grid.centers;
  update_centers(grid, state, vec2(0.3, -0.8));

  SUBCASE("a first win jumps exactly onto the input") {
    CHECK(grid.centers(3, 0) == 0.3);
    CHECK(grid.centers(0, 1) == -0.8);
  }
  SUBCASE("every non-winner is bit-identical") {
    for (int l = 0; l < 5; ++l) {
      for (int i = 0; i < 2; ++i) {
        if ((l == 3 && i == 0) || (l == 0 && i == 1)) continue;
        CHECK(grid.centers(l, i) == before(l, i));
      }
    }
  }
  SUBCASE("exactly one win per axis was recorded") {
    CHECK(state.win_counts.col(0).sum() == 1);
    CHECK(state.win_counts.col(1).sum() == 1);
    CHECK(state.win_counts(3, 0) == 1);
    CHECK(state.win_counts(0, 1) == 1);
  }
}

TEST_CASE("k-means steps reproduce the running mean") {
  SUBCASE("the documented three-value sequence ends on their mean") {
    ModelConfig config{1, 2, 1.0};
    MembershipGrid grid = init_centers(config);
    CenterLearnerState state = make_center_state(config, CenterRuleConfig{});
    // values near +1 always win center 1 while center 0 stays at -1
    for (double value : {0.2, 0.4, 0.6}) {
      update_centers(grid, state, vec1(value));
    }
    CHECK(grid.centers(1, 0) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(state.win_counts(1, 0) == 3);
  }
  SUBCASE("random win sequences match the mean oracle") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> cluster(0.2, 1.0);
    for (int length : {1, 7, 100}) {
      ModelConfig config{1, 2, 1.0};
      MembershipGrid grid = init_centers(config);
      CenterLearnerState state = make_center_state(config, CenterRuleConfig{});
      std::vector<double> values;
      for (int k = 0; k < length; ++k) {
        values.push_back(cluster(rng));
        update_centers(grid, state, vec1(values.back()));
      }
      CHECK(std::abs(grid.centers(1, 0) - testing::running_mean(values)) < 1e-12);
    }
  }
}

TEST_CASE("k-means step sizes follow one over the win count") {
  ModelConfig config{1, 2, 1.0};
  CenterLearnerState state = make_center_state(config, CenterRuleConfig{});
  state.win_counts(1, 0) = 1;
  CHECK(step_kmeans(state, 1, 0) == 1.0);
  state.win_counts(1, 0) = 4;
  CHECK(step_kmeans(state, 1, 0) == 0.25);
  state.win_counts(0, 0) = 0;
  CHECK_THROWS_AS(step_kmeans(state, 0, 0), ValidationError);
}

TEST_CASE("kohonen steps advance the accumulator before inverting it") {
  SUBCASE("unit input with no forgetting halves the step") {
    CenterLearnerState state = make_center_state(ModelConfig{1, 2, 1.0},
                                                 kohonen_config(1.0));
    const double step = step_kohonen(state, 0, 0, 1.0, 1.0);
    CHECK(state.accumulators(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(step == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("a small accumulator is clamped to a full step") {
    CenterLearnerState state = make_center_state(ModelConfig{1, 2, 1.0},
                                                 kohonen_config(0.0));
    // beta = 0, x = 0.5: accumulator 0.25, raw step 4, clamped to 1
    const double step = step_kohonen(state, 0, 0, 0.5, 0.0);
    CHECK(state.accumulators(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(step == 1.0);
  }
  SUBCASE("zero input with full forgetting kills the accumulator") {
    CenterLearnerState state = make_center_state(ModelConfig{1, 2, 1.0},
                                                 kohonen_config(0.0));
    CHECK_THROWS_AS(step_kohonen(state, 0, 0, 0.0, 0.0), NumericalError);
  }
}

TEST_CASE("win counts account for every processed sample") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ModelConfig config{3, 5, 0.5};
  MembershipGrid grid = init_centers(config);
  CenterLearnerState state = make_center_state(config, CenterRuleConfig{});
  const int samples = 250;
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXd x(3);
    for (int i = 0; i < 3; ++i) x[i] = unit(rng);
    update_centers(grid, state, x);
  }
  for (int i = 0; i < 3; ++i) {
    CHECK(state.win_counts.col(i).sum() == samples);
  }
}

TEST_CASE("centers never leave the unit hypercube") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const CenterRuleConfig& rule_config :
       {CenterRuleConfig{}, kohonen_config(0.9), kohonen_config(0.0)}) {
    ModelConfig config{2, 5, 0.5};
    MembershipGrid grid = init_centers(config);
    CenterLearnerState state = make_center_state(config, rule_config);
    for (int k = 0; k < 10000; ++k) {
      update_centers(grid, state, vec2(unit(rng), unit(rng)));
      CHECK(grid.centers.cwiseAbs().maxCoeff() <= 1.0);
    }
  }
}

TEST_CASE("winners on different axes may carry different rule indices") {
  // no per-rule coupling across axes: each coordinate adapts on its own
  ModelConfig config{2, 3, 1.0};
  MembershipGrid grid = init_centers(config);  // -1, 0, 1 on both axes
  CenterLearnerState state = make_center_state(config, CenterRuleConfig{});
  update_centers(grid, state, vec2(-0.4, 0.8));
  CHECK(grid.centers(1, 0) == -0.4);  // rule 1 won axis 0
  CHECK(grid.centers(2, 1) == 0.8);   // rule 2 won axis 1
  CHECK(grid.centers(1, 1) == 0.0);   // rule 1 untouched on axis 1
  CHECK(grid.centers(2, 0) == 1.0);   // rule 2 untouched on axis 0
}

}  // TEST_SUITE
