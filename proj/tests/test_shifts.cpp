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

#include <sstream>

#include "bwo/families.hpp"
#include "bwo/measures.hpp"
#include "bwo/shifts.hpp"
#include "support/fixtures.hpp"

namespace bwo {
namespace {

using testing::binary_env;
using testing::corpus_doc;
using testing::exp_of;
using testing::R;
using testing::binary_exp;

TEST(Indicative, BinaryThresholds) {
  Environment env = binary_env();
  for (const char* th : {"0.3", "0.5", "0.6", "1"}) {
    for (const char* ga : {"0.55", "0.5", "0.8"}) {
      Rational theta = R(th), gamma = R(ga);
      if (theta + gamma <= Rational(1)) continue;
      bool want = theta >= R("1/2") && gamma >= R("1/2");
      EXPECT_EQ(is_indicative(env, binary_exp(theta, gamma)).indicative, want) << th << " " << ga;
    }
  }
  IndicativeReport r = is_indicative(env, binary_exp(R("0.9"), R("0.2")));
  EXPECT_FALSE(r.indicative);
  EXPECT_EQ(r.violating_states, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(is_indicative(env, binary_exp(1, 1)).indicative);
}

TEST(Indicative, TieStatesCount) {
  Document d = corpus_doc("tie-state");
  auto classes = classify_signals(d.env, d.experiment("sigma"));
  EXPECT_TRUE(indicative_in_state(d.env, d.experiment("sigma"), classes, 2));
}

TEST(Apply, AlignedShiftRaisesTheta) {
  Environment env = binary_env();
  Experiment e = binary_exp(R("0.6"), R("0.7"));
  Experiment out = apply(env, e, {ShiftKind::Aligned, 0, 1, 0, R("0.1")});
  EXPECT_EQ(out, binary_exp(R("0.7"), R("0.7")));
}

TEST(Apply, NeutralShiftKeepsChoices) {
  Environment env = binary_env();
  Experiment e = exp_of({{"1/2", "1/4", "1/4"}, {"1/10", "1/10", "4/5"}});
  auto classes = classify_signals(env, e);
  ASSERT_EQ(classes[0], SignalClass::ChoosesX);
  ASSERT_EQ(classes[1], SignalClass::ChoosesX);
  Experiment out = apply(env, e, {ShiftKind::Neutral, 0, 0, 1, R("1/8")});
  EXPECT_EQ(induce(env, out).rho_cond, induce(env, e).rho_cond);
}

TEST(Apply, RejectsInvalidShifts) {
  Environment env = binary_env();
  Experiment e = binary_exp(R("0.6"), R("0.7"));
  EXPECT_BWO_ERROR(apply(env, e, {ShiftKind::Aligned, 0, 1, 0, R("0.5")}), ErrorCode::InvalidShift);
  // Moving mass towards the wrong choice is not aligned.
  EXPECT_BWO_ERROR(apply(env, e, {ShiftKind::Aligned, 0, 0, 1, R("0.1")}), ErrorCode::InvalidShift);
  EXPECT_BWO_ERROR(apply(env, e, {ShiftKind::Neutral, 0, 0, 1, R("0.1")}), ErrorCode::InvalidShift);
  // Advantages 1/20, 1/10, -3/20: draining s1 into s2 pushes s1 to a tie or past it.
  Experiment three = exp_of({{"0.3", "0.3", "0.4"}, {"0.2", "0.1", "0.7"}});
  EXPECT_BWO_ERROR(apply(env, three, {ShiftKind::Neutral, 0, 0, 1, R("0.1")}), ErrorCode::ClassificationChanged);
  EXPECT_BWO_ERROR(apply(env, three, {ShiftKind::Neutral, 0, 0, 1, R("0.2")}), ErrorCode::ClassificationChanged);
  EXPECT_NO_THROW(apply(env, three, {ShiftKind::Neutral, 0, 0, 1, R("0.05")}));
}

TEST(Decompose, SingleAlignedShift) {
  Environment env = binary_env();
  Decomposition d = decompose(env, binary_exp(R("0.6"), R("0.7")), binary_exp(R("0.7"), R("0.7")));
  ASSERT_TRUE(d.decomposable);
  ASSERT_EQ(d.shifts.size(), 1u);
  EXPECT_EQ(d.shifts[0], (Shift{ShiftKind::Aligned, 0, 1, 0, R("0.1")}));
  EXPECT_EQ(replay(env, binary_exp(R("0.6"), R("0.7")), d.shifts), binary_exp(R("0.7"), R("0.7")));
}

TEST(Decompose, EmptyAndImpossible) {
  Environment env = binary_env();
  Experiment e = binary_exp(R("0.7"), R("0.7"));
  Decomposition same = decompose(env, e, e);
  EXPECT_TRUE(same.decomposable);
  EXPECT_TRUE(same.shifts.empty());
  Decomposition no = decompose(env, e, binary_exp(R("0.6"), R("0.8")));
  EXPECT_FALSE(no.decomposable);
  EXPECT_EQ(no.violating_state, std::optional<std::size_t>(0));
}

TEST(Decompose, Preconditions) {
  Document tie = corpus_doc("tie-state");
  EXPECT_BWO_ERROR(decompose(tie.env, tie.experiment("sigma"), tie.experiment("sigma")),
                   ErrorCode::PreconditionViolated);
  Environment env = binary_env();
  EXPECT_BWO_ERROR(decompose(env, Experiment::uninformative(2, 2), binary_exp(1, 1)), ErrorCode::PreconditionViolated);
  EXPECT_BWO_ERROR(decompose(env, exp_of({{"1", "0", "0"}, {"0", "1", "0"}}), exp_of({{"1/2", "0", "1/2"}, {"0", "1", "0"}})),
                   ErrorCode::PreconditionViolated);
}

TEST(Sufficiency, BinaryRaiseTheta) {
  Environment env = binary_env();
  SufficiencyReport r = verify_suff(env, binary_exp(R("0.6"), R("0.7")), {{ShiftKind::Aligned, 0, 1, 0, R("0.1")}});
  EXPECT_TRUE(r.payoff);
  EXPECT_TRUE(r.expected_confidence);
  EXPECT_EQ(r.less_random, std::optional<bool>(true));
  EXPECT_FALSE(r.expected_less_random);
}

TEST(Sufficiency, EmptySequence) {
  Environment env = binary_env();
  SufficiencyReport r = verify_suff(env, binary_exp(R("0.6"), R("0.7")), {});
  EXPECT_TRUE(r.payoff);
  EXPECT_TRUE(r.expected_confidence);
  EXPECT_EQ(r.less_random, std::optional<bool>(true));
  EXPECT_TRUE(r.expected_less_random);
}

TEST(Sufficiency, LowerLambdaIsAlignedShift) {
  Document d = corpus_doc("luce-probes");
  Experiment hi = families::luce(d.env, 2.0);
  Experiment lo = families::luce(d.env, 0.5);
  Decomposition dec = decompose(d.env, hi, lo);
  ASSERT_TRUE(dec.decomposable) << dec.reason;
  for (const auto& s : dec.shifts) EXPECT_EQ(s.kind, ShiftKind::Aligned);
  SufficiencyReport r = verify_suff(d.env, hi, dec.shifts);
  EXPECT_EQ(r.final_experiment, lo);
  EXPECT_TRUE(r.payoff);
  EXPECT_TRUE(r.expected_confidence);
  EXPECT_EQ(r.less_random, std::optional<bool>(true));
}

TEST(ShiftsCsv, RoundTrip) {
  std::vector<Shift> shifts{{ShiftKind::Aligned, 0, 1, 0, R("1/10")}, {ShiftKind::Neutral, 3, 2, 1, R("7/40")}};
  std::stringstream ss;
  write_shifts_csv(ss, shifts);
  EXPECT_EQ(ss.str().substr(0, 22), "kind,state,from,to,mas");
  EXPECT_EQ(read_shifts_csv(ss), shifts);
  std::istringstream bad("kind,state,from,to,mass\nsideways,0,1,0,1/10\n");
  EXPECT_BWO_ERROR(read_shifts_csv(bad), ErrorCode::ParseError);
}

}  // namespace
}  // namespace bwo
