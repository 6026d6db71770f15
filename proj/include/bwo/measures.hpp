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
#include <iosfwd>
#include <optional>
#include <vector>

#include "bwo/model.hpp"

namespace bwo {

using MaybeRational = std::optional<Rational>;

struct RandomnessReport {
  std::vector<Rational> by_state;  ///< max_x rho(x|w)
  Rational expected;               ///< max_x rho(x)
};

/// Conditional confidence psi(o|w), indexed [option][state]; absent where o
/// is never chosen in w.
using ConfidenceTable = std::array<std::vector<MaybeRational>, 2>;

struct PayoffReport {
  std::vector<Rational> by_state;  ///< W(sigma|w)
  Rational total;                  ///< W(sigma)
  Rational psych;                  ///< W^psych(sigma)
};

struct MeasureReport {
  ChoiceProfile profile;
  RandomnessReport randomness;
  ConfidenceTable conf_cond;
  std::array<MaybeRational, 2> conf_exp;
  Rational conf_overall;
  PayoffReport payoff;
  Rational wta;
  std::vector<std::vector<Rational>> attenuation;  ///< [i][j] = Delta_ij
};

RandomnessReport randomness(const ChoiceProfile& profile);

/// psi(o|w) = sum_s sigma(s|w) c(o|s) pi(W^(o)|s) / rho(o|w). Signals with
/// zero marginal probability have no posterior and are left out of both the
/// numerator and the denominator (this only matters in zero-prior states).
ConfidenceTable confidence_cond(const Environment& env, const Experiment& exp);

/// Expected confidence psi(o), present iff rho(o) > 0.
std::array<MaybeRational, 2> confidence_exp(const Environment& env, const Experiment& exp);

/// Expected confidence restated with explicit 1/2 weights on tie signals.
/// Must agree with confidence_exp.
std::array<MaybeRational, 2> confidence_exp_by_class(const Environment& env, const Experiment& exp);

/// Overall confidence sum_o rho(o) psi(o).
Rational confidence_overall(const Environment& env, const Experiment& exp);

PayoffReport payoffs(const Environment& env, const Experiment& exp);

/// Posterior expected utility of each option after each signal; absent for
/// zero-probability signals.
std::vector<std::optional<Split>> signal_payoffs(const Environment& env, const Experiment& exp);

/// Posterior probability that each option is weakly optimal after each
/// signal; absent for zero-probability signals.
std::vector<std::optional<Split>> signal_correctness(const Environment& env, const Experiment& exp);

/// Willingness to accept, evaluated as the double sum over S(x) and S(y).
Rational wta(const Environment& env, const Experiment& exp);

/// Probability of choosing x in each state, counting ties as 1/2.
std::vector<Rational> choose_x_prob(const Environment& env, const Experiment& exp);

/// Delta_ij = P(choose x|w_i) - P(choose x|w_j) for all ordered pairs.
std::vector<std::vector<Rational>> attenuation_deltas(const Environment& env, const Experiment& exp);

MeasureReport measure(const Environment& env, const Experiment& exp);

/// Flat `key = value` report.
void write_report(std::ostream& os, const MeasureReport& r);
/// One row per state.
void write_state_csv(std::ostream& os, const Environment& env, const MeasureReport& r);
/// One row per ordered state pair.
void write_pair_csv(std::ostream& os, const MeasureReport& r);

/// "p/q (0.dddddd)" or "undefined".
std::string format_value(const MaybeRational& v);

}  // namespace bwo
