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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwo/measures.hpp"
#include "bwo/model.hpp"
#include "bwo/verdict.hpp"

namespace bwo {

enum class OrderingId {
  LessRandom,
  ExpectedLessRandom,
  ConfidenceDom,
  ExpectedConfidenceDom,
  OverallConfidenceDom,
  ChoicePayoffDom,
  StateConditionalPayoffDom,
  PsychPayoffDom,
  WtaOrder,
  LessAttenuated,
  BlackwellDom,
  RocDom,
};

inline constexpr std::array<OrderingId, 12> kAllOrderings{
    OrderingId::LessRandom,          OrderingId::ExpectedLessRandom,
    OrderingId::ConfidenceDom,       OrderingId::ExpectedConfidenceDom,
    OrderingId::OverallConfidenceDom, OrderingId::ChoicePayoffDom,
    OrderingId::StateConditionalPayoffDom, OrderingId::PsychPayoffDom,
    OrderingId::WtaOrder,            OrderingId::LessAttenuated,
    OrderingId::BlackwellDom,        OrderingId::RocDom,
};

/// Kebab-case name used on the command line, e.g. "less-random".
std::string_view ordering_name(OrderingId id);
std::optional<OrderingId> parse_ordering(std::string_view name);

/// Weak dominance of `a` over `b` in both directions for one ordering.
/// Confidence orderings quantify over options chosen with positive
/// probability by both experiments; per state, only states where both
/// conditional confidences are defined are compared. LessAttenuated uses the
/// weak sign-conditional clauses. RocDom throws as `densities` does.
OrderVerdict compare(const Environment& env, const Experiment& a, const Experiment& b, OrderingId which);

/// Every ordering; RocDom is nullopt when the environment has supported tie
/// states or an uneven hypothesis split.
std::vector<std::pair<OrderingId, std::optional<OrderVerdict>>> full_matrix(const Environment& env,
                                                                           const Experiment& a,
                                                                           const Experiment& b);

/// Attenuation clause test on precomputed deltas: for every pair with
/// Delta_ij(b) > 0 require Delta_ij(a) >= (or > when strict) Delta_ij(b), and
/// symmetrically for Delta_ij(b) < 0.
bool less_attenuated(const std::vector<std::vector<Rational>>& da, const std::vector<std::vector<Rational>>& db,
                     bool strict);

}  // namespace bwo
