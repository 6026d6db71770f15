// Copyright 2026 The Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "bwo/families.hpp"
#include "bwo/measures.hpp"
#include "bwo/orders.hpp"
#include "bwo/shifts.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace bwo {
namespace {

using testing::binary_env;
using testing::corpus_doc;
using testing::exp_of;
using testing::R;
using testing::binary_exp;

const double kE = std::exp(1.0);

TEST(Luce, LogitRows) {
  Environment env = binary_env();
  Experiment e = families::luce(env, 1.0);
  EXPECT_NEAR(e.at(0, 0).to_double(), kE / (kE + 1), 1e-11);
  EXPECT_EQ(e.at(1, 1), e.at(0, 0));
  EXPECT_EQ(e.at(0, 0) + e.at(0, 1), Rational(1));
  Experiment flat = families::luce(env, 1e9);
  EXPECT_NEAR(flat.at(0, 0).to_double(), 0.5, 1e-6);
  Document tie = corpus_doc("tie-state");
  EXPECT_EQ(families::luce(tie.env, 0.3).at(2, 0), R("1/2"));
  EXPECT_BWO_ERROR(families::luce(env, 0.0), ErrorCode::NonPositiveLambda);
  EXPECT_BWO_ERROR(families::luce(env, -1.0), ErrorCode::NonPositiveLambda);
}

TEST(Luce, PrecisionFromEnvironment) {
  ::setenv("BWO_PRECISION", "10", 1);
  EXPECT_EQ(families::snap_precision(), 10ul);
  Experiment coarse = families::luce(binary_env(), 1.0);
  EXPECT_EQ(coarse.at(0, 0), R("5/7"));
  ::setenv("BWO_PRECISION", "junk", 1);
  EXPECT_EQ(families::snap_precision(), families::kDefaultPrecision);
  ::unsetenv("BWO_PRECISION");
  EXPECT_EQ(families::snap_precision(), families::kDefaultPrecision);
}

TEST(Luce, MonotoneAndIndicativeAcrossLambda) {
  Document d = corpus_doc("luce-probes");
  const double grid[] = {0.05, 0.1, 0.3, 1, 3, 10, 20};
  for (double l : grid) EXPECT_TRUE(is_indicative(d.env, families::luce(d.env, l)).indicative) << l;
  for (std::size_t i = 0; i + 1 < std::size(grid); ++i) {
    Experiment sharp = families::luce(d.env, grid[i]);
    Experiment soft = families::luce(d.env, grid[i + 1]);
    for (OrderingId id : {OrderingId::LessRandom, OrderingId::ChoicePayoffDom, OrderingId::ExpectedConfidenceDom}) {
      EXPECT_TRUE(compare(d.env, sharp, soft, id).forward) << grid[i] << " " << ordering_name(id);
    }
  }
}

TEST(Repeat, IdentityAndProducts) {
  Experiment e = binary_exp(R("0.9"), R("0.2"));
  EXPECT_EQ(families::repeat(e, 1), e);
  Experiment t2 = families::repeat(e, 2);
  ASSERT_EQ(t2.signal_count(), 4u);
  EXPECT_EQ(t2.at(0, 0), R("0.81"));
  EXPECT_EQ(t2.at(0, 1), R("0.09"));
  EXPECT_EQ(t2.at(1, 2), R("0.16"));
  Experiment t3 = families::repeat(exp_of({{"1/2", "1/3", "1/6"}, {"0", "1/4", "3/4"}}), 3);
  for (std::size_t w = 0; w < 2; ++w) {
    Rational sum;
    for (const auto& v : t3.row(w)) sum += v;
    EXPECT_EQ(sum, Rational(1));
  }
  EXPECT_BWO_ERROR(families::repeat(e, 0), ErrorCode::InvalidArgument);
  EXPECT_BWO_ERROR(families::repeat(e, 13), ErrorCode::BudgetExceeded);
  EXPECT_NO_THROW(families::repeat(e, 3, 8));
  EXPECT_BWO_ERROR(families::repeat(e, 4, 8), ErrorCode::BudgetExceeded);
}

TEST(Repeat, TwoDrawsChoicesAndConfidence) {
  Environment env = binary_env();
  Experiment t2 = families::repeat(binary_exp(R("0.9"), R("0.2")), 2);
  auto classes = classify_signals(env, t2);
  EXPECT_EQ(classes[0], SignalClass::ChoosesX);
  for (std::size_t s = 1; s < 4; ++s) EXPECT_EQ(classes[s], SignalClass::ChoosesY) << s;
  RandomnessReport r = randomness(induce(env, t2));
  EXPECT_EQ(r.by_state, (std::vector<Rational>{R("0.81"), R("0.64")}));
  EXPECT_EQ(posterior(env, t2, 0)[0], R("81/145"));
  EXPECT_EQ(posterior(env, t2, 1)[1], R("16/25"));
  EXPECT_EQ(posterior(env, t2, 3)[1], R("4/5"));
}

TEST(Gaussian, CorrectProbability) {
  using families::GaussianSetup;
  EXPECT_DOUBLE_EQ(families::gaussian_correct_prob({}, 0.0), 0.5);
  GaussianSetup unit{0.0, 1.0, 0.5, 1.0};
  EXPECT_NEAR(families::gaussian_correct_prob(unit, 1.0), oracle::normal_cdf(1.0), 1e-12);
  EXPECT_NEAR(families::gaussian_correct_prob(unit, 1.0), 0.841345, 1e-6);
  GaussianSetup sharp{0.0, 1.0, 1.0, 1e-12};
  EXPECT_NEAR(families::gaussian_correct_prob(sharp, 1.0), 1.0, 1e-12);
  EXPECT_BWO_ERROR(families::gaussian_correct_prob({0, 1, 1, 0}, 1.0), ErrorCode::NonPositiveVariance);
  EXPECT_BWO_ERROR(families::gaussian_correct_prob({0, 0, 1, 1}, 1.0), ErrorCode::NonPositiveVariance);
  for (double x : {-6.0, -2.5, -0.3, 0.7, 3.2, 5.0}) EXPECT_NEAR(families::normal_cdf(x), oracle::normal_cdf(x), 1e-13);
}

TEST(Fechner, ChoiceProbability) {
  families::FechnerSpec logistic{families::ResponseFunction::logistic(), 1.0};
  EXPECT_DOUBLE_EQ(families::fechner_choose_prob(logistic, 2.0, 2.0), 0.5);
  EXPECT_NEAR(families::fechner_choose_prob(logistic, 1.0, 0.0), kE / (kE + 1), 1e-15);
  for (const char* name : {"logistic", "probit", "clamp"}) {
    families::FechnerSpec s{families::ResponseFunction::by_name(name), 0.7};
    EXPECT_TRUE(families::validate(s).empty()) << name;
    EXPECT_NEAR(families::fechner_choose_prob(s, 1.3, 0.2) + families::fechner_choose_prob(s, 0.2, 1.3), 1.0, 1e-15);
  }
  EXPECT_BWO_ERROR(families::ResponseFunction::by_name("cubic"), ErrorCode::InvalidArgument);
}

TEST(Fechner, ValidateFindsBrokenResponse) {
  families::FechnerSpec shifted{{"shifted", [](double s) { return std::clamp(0.6 + s / 4, 0.0, 1.0); }}, 1.0};
  EXPECT_FALSE(families::validate(shifted).empty());
  families::FechnerSpec bad_lambda{families::ResponseFunction::logistic(), 0.0};
  EXPECT_FALSE(families::validate(bad_lambda).empty());
}

TEST(Fechner, Comovement) {
  families::FechnerSpec logistic{families::ResponseFunction::logistic(), 1.0};
  auto r = families::fechner_comovement_check(logistic, 1.0, 0.0, {0.5, 1.0, 2.0});
  EXPECT_TRUE(r.comonotone);
  EXPECT_GT(r.payoff[0], r.payoff[1]);
  EXPECT_GT(r.payoff[1], r.payoff[2]);
  auto flat = families::fechner_comovement_check(logistic, 1.0, 1.0, {0.5, 1.0, 2.0});
  EXPECT_TRUE(flat.comonotone);
  // Symmetric but not monotone: choice can fall below 1/2 while the distance grows.
  families::FechnerSpec wavy{{"wavy", [](double s) { return 0.5 + 0.4 * std::sin(s); }}, 1.0};
  auto w = families::fechner_comovement_check(wavy, 1.0, 0.0, {0.2, 0.25, 0.5, 1.0});
  EXPECT_FALSE(w.comonotone);
  EXPECT_FALSE(w.violations.empty());
}

TEST(Fechner, CrossPartialSigns) {
  families::FechnerSpec logistic{families::ResponseFunction::logistic(), 1.0};
  EXPECT_LT(families::fechner_cross_partial(logistic, 0.1, 0.0, 1.0), 0.0);
  EXPECT_GT(families::fechner_cross_partial(logistic, 5.0, 0.0, 1.0), 0.0);
  EXPECT_EQ(families::fechner_crosspartial_sign(logistic, {0.1, 5.0}, 0.0, 1.0), (std::vector<int>{-1, 1}));
  double kappa = families::fechner_sign_change(logistic, 0.0, 1.0, 1.0, 2.5);
  EXPECT_GT(kappa, 1.5);
  EXPECT_LT(kappa, 2.5);
  EXPECT_NEAR(kappa, oracle::kappa_star(), 1e-6);
  EXPECT_BWO_ERROR(families::fechner_sign_change(logistic, 0.0, 1.0, 2.0, 3.0), ErrorCode::InvalidArgument);
}

TEST(Cmc, Cost) {
  Environment env = binary_env();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> one{{0, 1}, {0, 0}};
  EXPECT_EQ(families::cmc_cost(env, Experiment::uninformative(2, 2), {{1, 1}, {1, 1}}), 0.0);
  EXPECT_EQ(families::cmc_cost(env, binary_exp(R("0.9"), R("0.2")), {{0, 0}, {0, 0}}), 0.0);
  EXPECT_NEAR(families::cmc_cost(env, exp_of({{"1", "0"}, {"1/2", "1/2"}}), one), std::log(2.0), 1e-15);
  EXPECT_EQ(families::cmc_cost(env, exp_of({{"1/2", "1/2"}, {"1", "0"}}), one), inf);
  EXPECT_EQ(families::cmc_cost(env, exp_of({{"1/2", "1/2"}, {"1", "0"}}), {{0, 0}, {1, 0}}), std::log(2.0));
  EXPECT_EQ(families::cmc_cost(env, exp_of({{"1/2", "1/2"}, {"1", "0"}}), {{0, 0}, {0, 0}}), 0.0);
  EXPECT_EQ(families::cmc_cost(env, Experiment::uninformative(2, 2), {{0, inf}, {inf, 0}}), 0.0);
  EXPECT_BWO_ERROR(families::cmc_cost(env, binary_exp(1, 1), {{0, 1}}), ErrorCode::DimensionMismatch);
  EXPECT_BWO_ERROR(families::cmc_cost(env, binary_exp(1, 1), {{0, -1}, {0, 0}}), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace bwo
