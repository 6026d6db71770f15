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

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwo/model.hpp"
#include "bwo/orders.hpp"

namespace bwo::search {

// ─── Sampling ──────────────────────────────────────────────────────────────

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for sample `index` of a run seeded with `seed`.
Rng stream(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, n) by rejection, identical across platforms.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// `parts` nonnegative integers summing to `total`.
std::vector<long> composition(Rng& rng, long total, std::size_t parts);

/// Symmetric environment: mirrored pairs (a,b)/(b,a) with utilities drawn
/// from `grid`, plus one tie state when `states` is odd. Pair masses are a
/// positive integer composition of `denominator`.
Environment random_environment(Rng& rng, std::size_t states, const std::vector<Rational>& grid, long denominator);

/// Rows are integer compositions of `denominator` over the signals.
Experiment random_experiment(Rng& rng, std::size_t states, std::size_t signals, long denominator);

// ─── Predicate search ──────────────────────────────────────────────────────

enum class Requirement { Forward, Backward, NotForward, NotBackward, Equal, Incomparable, StrictForward, StrictBackward };

std::string_view requirement_name(Requirement r);
std::optional<Requirement> parse_requirement(std::string_view name);
bool satisfies(const OrderVerdict& v, Requirement r);

struct Constraint {
  OrderingId order;
  Requirement require;
};

struct SearchSpec {
  std::uint64_t seed = 0;
  std::size_t n_samples = 1000;
  std::size_t state_count = 4;
  std::size_t signal_count = 2;
  std::vector<Rational> utility_grid{Rational(0), Rational(1)};
  long denominator = 100;
  std::vector<Constraint> predicate;  ///< conjunction; empty = always true
  std::size_t workers = 1;
  std::size_t max_witnesses = std::numeric_limits<std::size_t>::max();
};

struct Witness {
  std::string source;  ///< "sample:<index>" or the pool entry's label
  Environment env;
  Experiment a;
  Experiment b;
};

/// Evaluates the predicate on `pool` (in order) and then on n_samples random
/// triples. Output is deterministic in the spec and independent of `workers`.
/// Orderings that cannot be evaluated on a candidate count as unsatisfied.
std::vector<Witness> find(const SearchSpec& spec, const std::vector<Witness>& pool = {});

bool predicate_holds(const std::vector<Constraint>& predicate, const Environment& env, const Experiment& a,
                     const Experiment& b);

// ─── Region map ────────────────────────────────────────────────────────────

/// Two equally likely states (1,0) and (0,1).
Environment binary_environment();
/// Rows (theta, 1-theta) and (1-gamma, gamma).
Experiment binary_experiment(const Rational& theta, const Rational& gamma);

inline constexpr std::array<OrderingId, 4> kRegionOrderings{OrderingId::LessRandom, OrderingId::ExpectedLessRandom,
                                                            OrderingId::ConfidenceDom, OrderingId::ChoicePayoffDom};

struct RegionCell {
  Rational theta;
  Rational gamma;
  std::array<OrderVerdict, 4> verdicts;  ///< cell vs reference, in kRegionOrderings order
};

struct RegionMap {
  Rational theta_ref;
  Rational gamma_ref;
  Rational step;
  Rational low;  ///< 1/2 or 0
  std::vector<RegionCell> cells;  ///< theta-major, ascending
};

/// Throws InvalidArgument unless step divides 1 - low and the reference lies
/// in [0,1]^2.
RegionMap region_map(const Rational& theta, const Rational& gamma, const Rational& step, bool full_square);

/// Columns theta,gamma,ordering,verdict.
void write_region_csv(std::ostream& os, const RegionMap& map);

}  // namespace bwo::search
