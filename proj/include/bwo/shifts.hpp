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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bwo/model.hpp"

namespace bwo {

enum class ShiftKind { Aligned, Neutral };

/// Moves `mass` from one signal to another within one state's row.
struct Shift {
  ShiftKind kind = ShiftKind::Aligned;
  std::size_t state = 0;
  std::size_t from_signal = 0;
  std::size_t to_signal = 0;
  Rational mass;
  friend bool operator==(const Shift&, const Shift&) = default;
};

struct IndicativeReport {
  bool indicative = true;
  std::vector<std::size_t> violating_states;
};

/// In every non-tie state, signals inducing the correct choice carry at least
/// as much mass as signals inducing the wrong one (tie signals ignored).
IndicativeReport is_indicative(const Environment& env, const Experiment& exp);

/// The same test restricted to one state; tie states count as indicative.
bool indicative_in_state(const Environment& env, const Experiment& exp, const std::vector<SignalClass>& classes,
                         std::size_t state);

/// Applies one shift. Throws InvalidShift when the shift is not aligned or
/// neutral for `exp`, and ClassificationChanged when it would move a signal
/// across a tie.
Experiment apply(const Environment& env, const Experiment& exp, const Shift& shift);

Experiment replay(const Environment& env, const Experiment& exp, const std::vector<Shift>& shifts);

struct Decomposition {
  bool decomposable = false;
  std::vector<Shift> shifts;
  std::optional<std::size_t> violating_state;
  std::string reason;
};

/// Shift sequence turning `from` into `to`, or the first state whose
/// correct-choice mass would have to fall.
///
/// Requires no tie states, no tie signals in either experiment, equal
/// supports and equal signal classifications (PreconditionViolated
/// otherwise). The path from `from` to `to` is cut into N equal steps, with N
/// the smallest power of two (or a computed safe bound) that keeps every
/// intermediate classification; each step processes states in index order,
/// aligned transfers first, then neutral rebalancing, pairing the
/// lowest-index giver with the lowest-index receiver.
Decomposition decompose(const Environment& env, const Experiment& from, const Experiment& to);

struct SufficiencyReport {
  bool payoff = false;                  ///< final payoff-dominates start
  bool expected_confidence = false;     ///< final expected-confidence-dominates start
  std::optional<bool> less_random;      ///< set when the start is indicative
  bool expected_less_random = false;    ///< informational only
  Experiment final_experiment;
};

SufficiencyReport verify_suff(const Environment& env, const Experiment& from, const std::vector<Shift>& shifts);

/// Rows `kind,state,from,to,mass` with a header line.
void write_shifts_csv(std::ostream& os, const std::vector<Shift>& shifts);
std::vector<Shift> read_shifts_csv(std::istream& is);

}  // namespace bwo
