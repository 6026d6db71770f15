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

#include <cstddef>
#include <vector>

#include "bwo/rational.hpp"

namespace bwo::lp {

/// A x = b with x >= 0.
struct FeasibilityProblem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> x;            ///< set when feasible
  std::vector<Rational> certificate;  ///< y with y^T A >= 0, y^T b < 0 when infeasible
};

/// Exact phase-1 simplex with Bland's rule. Solutions and certificates are
/// checked before returning.
FeasibilityResult feasible(const FeasibilityProblem& p);

/// Bipartite transportation network with unbounded arc capacities.
struct FlowNetwork {
  std::vector<Rational> supply;
  std::vector<Rational> demand;
  std::vector<std::vector<bool>> allowed;  ///< [source][sink]
};

/// Sources whose supply exceeds the demand of every sink they reach.
struct HallCut {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
  Rational supply;
  Rational demand;
};

struct TransportResult {
  bool feasible = false;
  std::vector<std::vector<Rational>> flow;  ///< [source][sink], set when feasible
  HallCut cut;                              ///< set when infeasible
};

/// Exact max-flow (shortest augmenting paths, arcs scanned in index order).
/// Throws InvalidArgument on negative or unequal totals and DimensionMismatch
/// on a malformed allowed grid.
TransportResult transport_feasible(const FlowNetwork& net);

}  // namespace bwo::lp
