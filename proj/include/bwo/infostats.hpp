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
#include <utility>
#include <vector>

#include "bwo/model.hpp"
#include "bwo/verdict.hpp"

namespace bwo {

/// Aggregate signal densities under "x is correct" and "y is correct".
struct HypothesisDensities {
  std::vector<Rational> f_x;
  std::vector<Rational> f_y;
};

struct RocPoint {
  Rational fpr;
  Rational tpr;
  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// Upper envelope of the Neyman-Pearson tests, as vertices from (0,0) to (1,1).
struct RocCurve {
  std::vector<RocPoint> vertices;

  /// Envelope value at a false positive rate in [0,1] (linear between vertices;
  /// at a vertical segment the highest value).
  Rational tpr_at(const Rational& fpr) const;
};

/// f_o(s) = sum over the weak optimality set of o of 2 pi(w) sigma(s|w).
/// Throws TieStatesPresent when a positive-prior state is a tie, and
/// HypothesisMassNotHalf when the prior does not split 1/2 : 1/2.
HypothesisDensities densities(const Environment& env, const Experiment& exp);

/// Likelihood ratio f_x/f_y per signal; nullopt encodes +infinity and signals
/// with f_x = f_y = 0 are reported as nullopt in `defined`.
struct LikelihoodRatio {
  std::vector<bool> defined;
  std::vector<std::optional<Rational>> value;  ///< nullopt = +infinity
};
LikelihoodRatio likelihood_ratio(const HypothesisDensities& d);

/// Evidence e(s) = f_x/(f_x+f_y); absent when both densities vanish.
std::vector<std::optional<Rational>> evidence(const HypothesisDensities& d);

RocCurve roc(const HypothesisDensities& d);
RocCurve roc(const Environment& env, const Experiment& exp);

/// forward iff a's envelope is weakly above b's everywhere.
OrderVerdict roc_dominates(const RocCurve& a, const RocCurve& b);

/// (FPR, TPR) of the decision maker's own choice rule.
RocPoint operating_point(const Environment& env, const Experiment& exp);

/// Blackwell comparison by garbling feasibility. forward means a is more
/// informative: b = a K for a row-stochastic K of shape |S_a| x |S_b|.
struct BlackwellVerdict {
  OrderVerdict verdict;
  std::optional<std::vector<std::vector<Rational>>> forward_kernel;   ///< b = a K
  std::optional<std::vector<std::vector<Rational>>> backward_kernel;  ///< a = b K
};

/// Garbling K with b = a K, if one exists. Rows of a and b are indexed by
/// the same states (or hypotheses).
std::optional<std::vector<std::vector<Rational>>> find_garbling(const std::vector<std::vector<Rational>>& a,
                                                                const std::vector<std::vector<Rational>>& b);

BlackwellVerdict blackwell_dominates(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<std::vector<Rational>>& b);
BlackwellVerdict blackwell_dominates(const Environment& env, const Experiment& a, const Experiment& b);

/// Blackwell comparison of the induced binary tests (rows f_x and f_y).
BlackwellVerdict binary_blackwell(const HypothesisDensities& a, const HypothesisDensities& b);

}  // namespace bwo
