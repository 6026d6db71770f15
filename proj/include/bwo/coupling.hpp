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

#include <optional>
#include <string_view>
#include <vector>

#include "bwo/lp.hpp"
#include "bwo/model.hpp"
#include "bwo/verdict.hpp"

namespace bwo {

/// A binary choice problem: environment plus experiment, with no
/// positive-prior tie states and no tie signals.
class Problem {
 public:
  /// Throws TieStatePresent / TieSignalPresent.
  Problem(Environment env, Experiment exp);

  const Environment& env() const { return env_; }
  const Experiment& exp() const { return exp_; }

 private:
  Environment env_;
  Experiment exp_;
};

enum class PairCriterion { AlignedDominance, CoupledLessRandom, InformationalAlignedDominance };

std::string_view criterion_name(PairCriterion c);
std::optional<PairCriterion> parse_criterion(std::string_view name);

using Grid = std::vector<std::vector<bool>>;
using MassGrid = std::vector<std::vector<Rational>>;

/// Pairs (w1, w2) over the states of `lower` x `upper` where `upper`'s state
/// may carry mass of `lower`'s state: matching optimality sets and the
/// criterion's improvement inequality.
Grid allowed_pairs(const Problem& lower, const Problem& upper, PairCriterion crit);

struct CouplingVerdict {
  OrderVerdict verdict;
  /// forward: coupling showing a dominates b, indexed [state of b][state of a].
  std::optional<MassGrid> forward_coupling;
  std::optional<lp::HallCut> forward_cut;
  /// backward: coupling showing b dominates a, indexed [state of a][state of b].
  std::optional<MassGrid> backward_coupling;
  std::optional<lp::HallCut> backward_cut;
};

/// forward iff `a` dominates `b` under `crit` (a coupling with marginals
/// pi_b and pi_a supported on allowed_pairs(b, a, crit) exists).
CouplingVerdict dominates(const Problem& a, const Problem& b, PairCriterion crit);

/// Aligned dominance and informational aligned dominance together.
OrderVerdict robust_dominates(const Problem& a, const Problem& b);

/// Whether one coupling witnesses both AlignedDominance and CoupledLessRandom
/// of `a` over `b`.
bool common_coupling_exists(const Problem& a, const Problem& b);

/// Checks marginals and support of a coupling indexed [lower][upper].
bool is_valid_coupling(const Problem& lower, const Problem& upper, const Grid& allowed, const MassGrid& mu);

}  // namespace bwo
