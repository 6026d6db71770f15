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
#include <cstddef>
#include <string>
#include <vector>

#include "bwo/rational.hpp"

namespace bwo {

enum class Option { X = 0, Y = 1 };

inline Option other(Option o) { return o == Option::X ? Option::Y : Option::X; }
inline std::size_t idx(Option o) { return static_cast<std::size_t>(o); }

/// A probability split over the two options.
struct Split {
  Rational x;
  Rational y;

  const Rational& operator[](Option o) const { return o == Option::X ? x : y; }
  Rational& operator[](Option o) { return o == Option::X ? x : y; }
  Rational max() const { return bwo::max(x, y); }
  friend bool operator==(const Split&, const Split&) = default;
};

struct State {
  Rational prior;
  Rational u_x;
  Rational u_y;

  Rational utility(Option o) const { return o == Option::X ? u_x : u_y; }
  /// u_x - u_y.
  Rational gap() const { return u_x - u_y; }
};

/// Which option is strictly better in a state, or Tie when indifferent.
enum class StateTag { XBetter, YBetter, Tie };

enum class SymmetryCheck { Enforce, Skip };

/// Finite state space with a prior and a utility pair per state.
///
/// Priors are nonnegative and sum to exactly 1. By default the prior must be
/// symmetric on its support: positive-prior mass on (a, b) equals mass on
/// (b, a). Zero-prior states are kept so indices stay stable.
class Environment {
 public:
  Environment() = default;
  explicit Environment(std::vector<State> states, SymmetryCheck check = SymmetryCheck::Enforce);

  std::size_t size() const { return states_.size(); }
  const State& state(std::size_t i) const { return states_.at(i); }
  const std::vector<State>& states() const { return states_; }
  const Rational& prior(std::size_t i) const { return states_[i].prior; }
  bool symmetric() const { return symmetric_; }

  StateTag tag(std::size_t i) const;
  /// Membership in the weak set {w : u(o|w) >= u(other|w)}.
  bool weakly_optimal(std::size_t i, Option o) const;
  /// Membership in the strict set {w : u(o|w) > u(other|w)}.
  bool strictly_optimal(std::size_t i, Option o) const;
  /// True when some state (any prior) has u_x == u_y.
  bool has_tie_states() const;
  /// True when some positive-prior state has u_x == u_y.
  bool has_supported_tie_states() const;
  /// Prior mass of the weak optimality set of `o`.
  Rational weak_mass(Option o) const;
  /// Expected utility of a uniformly random choice, sum pi (u_x + u_y) / 2.
  Rational baseline_payoff() const;

  /// Same states with u_x and u_y exchanged.
  Environment relabeled() const;

 private:
  std::vector<State> states_;
  bool symmetric_ = true;
};

/// Row-stochastic signal matrix, one row per state.
class Experiment {
 public:
  Experiment() = default;
  explicit Experiment(std::vector<std::vector<Rational>> rows);

  std::size_t state_count() const { return rows_.size(); }
  std::size_t signal_count() const { return signals_; }
  const Rational& at(std::size_t state, std::size_t signal) const { return rows_[state][signal]; }
  const std::vector<Rational>& row(std::size_t state) const { return rows_[state]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  /// The experiment every state maps to the same uniform row.
  static Experiment uninformative(std::size_t states, std::size_t signals);

  friend bool operator==(const Experiment&, const Experiment&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
  std::size_t signals_ = 0;
};

enum class SignalClass { ChoosesX, ChoosesY, Tie };

std::string_view signal_class_name(SignalClass c);

/// Option chosen by a non-tie class; Tie maps to nothing meaningful.
inline Option chosen(SignalClass c) { return c == SignalClass::ChoosesY ? Option::Y : Option::X; }
inline SignalClass class_of(Option o) { return o == Option::X ? SignalClass::ChoosesX : SignalClass::ChoosesY; }

/// Signal classes, choice rule and induced random choice of (env, exp).
struct ChoiceProfile {
  std::vector<SignalClass> classes;
  std::vector<Split> choice_rule;  ///< c(.|s)
  std::vector<Split> rho_cond;     ///< rho(.|w)
  Split rho_marg;                  ///< rho(.)
};

/// Throws DimensionMismatch unless exp has one row per state of env.
void check_compatible(const Environment& env, const Experiment& exp);

/// Delta(s) = sum_w pi(w) sigma(s|w) (u_x - u_y).
Rational advantage(const Environment& env, const Experiment& exp, std::size_t s);

std::vector<SignalClass> classify_signals(const Environment& env, const Experiment& exp);

/// sum_w pi(w) sigma(s|w).
Rational signal_marginal(const Environment& env, const Experiment& exp, std::size_t s);

/// Bayes posterior over states after signal s. Throws ZeroProbabilitySignal
/// when s has zero marginal probability.
std::vector<Rational> posterior(const Environment& env, const Experiment& exp, std::size_t s);

ChoiceProfile induce(const Environment& env, const Experiment& exp);

}  // namespace bwo
