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

#include "bwo/shifts.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "bwo/error.hpp"
#include "bwo/measures.hpp"
#include "bwo/orders.hpp"

namespace bwo {

namespace {

std::string describe(const Shift& s) {
  return std::string(s.kind == ShiftKind::Aligned ? "aligned" : "neutral") + " shift in state " +
         std::to_string(s.state) + " from signal " + std::to_string(s.from_signal) + " to " +
         std::to_string(s.to_signal);
}

// Correct option of a non-tie state.
Option correct_option(const Environment& env, std::size_t w) {
  return env.tag(w) == StateTag::XBetter ? Option::X : Option::Y;
}

Rational mass_on(const Experiment& exp, std::size_t w, const std::vector<SignalClass>& classes, SignalClass c) {
  Rational m;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    if (classes[s] == c) m += exp.at(w, s);
  }
  return m;
}

struct Pending {
  std::size_t signal;
  Rational amount;
};

// Greedy transfer between givers and receivers in index order, up to `cap`
// when given.
void transfer(std::vector<Pending>& givers, std::vector<Pending>& receivers, std::optional<Rational> cap,
              ShiftKind kind, std::size_t state, std::vector<Shift>& out) {
  std::size_t g = 0, r = 0;
  while (g < givers.size() && r < receivers.size()) {
    if (cap && cap->is_zero()) return;
    if (givers[g].amount.is_zero()) { ++g; continue; }
    if (receivers[r].amount.is_zero()) { ++r; continue; }
    Rational m = min(givers[g].amount, receivers[r].amount);
    if (cap) m = min(m, *cap);
    out.push_back({kind, state, givers[g].signal, receivers[r].signal, m});
    givers[g].amount -= m;
    receivers[r].amount -= m;
    if (cap) *cap -= m;
  }
}

// Shifts moving `cur` by `step` (a row difference summing to zero per state).
std::vector<Shift> step_shifts(const Environment& env, const std::vector<SignalClass>& classes,
                               const std::vector<std::vector<Rational>>& step) {
  std::vector<Shift> out;
  for (std::size_t w = 0; w < env.size(); ++w) {
    SignalClass good = class_of(correct_option(env, w));
    std::vector<Pending> good_give, good_take, bad_give, bad_take;
    Rational gain;
    for (std::size_t s = 0; s < step[w].size(); ++s) {
      const Rational& d = step[w][s];
      bool is_good = classes[s] == good;
      if (is_good) gain += d;
      if (d.sign() < 0) (is_good ? good_give : bad_give).push_back({s, -d});
      if (d.sign() > 0) (is_good ? good_take : bad_take).push_back({s, d});
    }
    transfer(bad_give, good_take, gain, ShiftKind::Aligned, w, out);
    transfer(good_give, good_take, std::nullopt, ShiftKind::Neutral, w, out);
    transfer(bad_give, bad_take, std::nullopt, ShiftKind::Neutral, w, out);
  }
  return out;
}

std::vector<bool> support(const Experiment& exp) {
  std::vector<bool> out(exp.signal_count(), false);
  for (std::size_t w = 0; w < exp.state_count(); ++w) {
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      if (exp.at(w, s).sign() > 0) out[s] = true;
    }
  }
  return out;
}

std::string kind_name(ShiftKind k) { return k == ShiftKind::Aligned ? "aligned" : "neutral"; }

}  // namespace

bool indicative_in_state(const Environment& env, const Experiment& exp, const std::vector<SignalClass>& classes,
                         std::size_t state) {
  if (env.tag(state) == StateTag::Tie) return true;
  Option k = correct_option(env, state);
  return mass_on(exp, state, classes, class_of(k)) >= mass_on(exp, state, classes, class_of(other(k)));
}

IndicativeReport is_indicative(const Environment& env, const Experiment& exp) {
  check_compatible(env, exp);
  auto classes = classify_signals(env, exp);
  IndicativeReport r;
  for (std::size_t w = 0; w < env.size(); ++w) {
    if (!indicative_in_state(env, exp, classes, w)) {
      r.indicative = false;
      r.violating_states.push_back(w);
    }
  }
  return r;
}

Experiment apply(const Environment& env, const Experiment& exp, const Shift& shift) {
  check_compatible(env, exp);
  auto invalid = [&](const std::string& why) { throw Error(ErrorCode::InvalidShift, describe(shift) + ": " + why); };
  if (shift.state >= env.size()) invalid("state out of range");
  if (shift.from_signal >= exp.signal_count() || shift.to_signal >= exp.signal_count()) {
    invalid("signal out of range");
  }
  if (shift.from_signal == shift.to_signal) invalid("source and target coincide");
  if (shift.mass.sign() <= 0) invalid("mass must be positive");
  if (shift.mass > exp.at(shift.state, shift.from_signal)) invalid("mass exceeds the source entry");
  if (env.tag(shift.state) == StateTag::Tie) invalid("state is a tie");

  auto before = classify_signals(env, exp);
  SignalClass cf = before[shift.from_signal];
  SignalClass ct = before[shift.to_signal];
  if (shift.kind == ShiftKind::Aligned) {
    Option k = correct_option(env, shift.state);
    if (cf != class_of(other(k)) || ct != class_of(k)) {
      invalid("signals must induce the wrong and the correct choice respectively");
    }
  } else if (cf != ct || cf == SignalClass::Tie) {
    invalid("signals must share a non-tie class");
  }

  auto rows = exp.rows();
  rows[shift.state][shift.from_signal] -= shift.mass;
  rows[shift.state][shift.to_signal] += shift.mass;
  Experiment next(std::move(rows));
  if (classify_signals(env, next) != before) {
    throw Error(ErrorCode::ClassificationChanged, describe(shift) + " moves a signal across a tie");
  }
  return next;
}

Experiment replay(const Environment& env, const Experiment& exp, const std::vector<Shift>& shifts) {
  Experiment cur = exp;
  for (const auto& s : shifts) cur = apply(env, cur, s);
  return cur;
}

Decomposition decompose(const Environment& env, const Experiment& from, const Experiment& to) {
  check_compatible(env, from);
  check_compatible(env, to);
  if (from.signal_count() != to.signal_count()) {
    throw Error(ErrorCode::DimensionMismatch, "experiments have different signal counts");
  }
  if (env.has_tie_states()) throw Error(ErrorCode::PreconditionViolated, "environment has tie states");
  auto cf = classify_signals(env, from);
  auto ct = classify_signals(env, to);
  for (std::size_t s = 0; s < cf.size(); ++s) {
    if (cf[s] == SignalClass::Tie || ct[s] == SignalClass::Tie) {
      throw Error(ErrorCode::PreconditionViolated, "signal " + std::to_string(s) + " is a tie");
    }
  }
  if (support(from) != support(to)) throw Error(ErrorCode::PreconditionViolated, "supports differ");
  if (cf != ct) {
    throw Error(ErrorCode::PreconditionViolated, "experiments classify signals differently");
  }

  Decomposition result;
  for (std::size_t w = 0; w < env.size(); ++w) {
    SignalClass good = class_of(correct_option(env, w));
    if (mass_on(to, w, cf, good) < mass_on(from, w, cf, good)) {
      result.violating_state = w;
      result.reason = "correct-choice mass falls in state " + std::to_string(w);
      return result;
    }
  }
  result.decomposable = true;
  if (from == to) return result;

  std::vector<std::vector<Rational>> diff(env.size(), std::vector<Rational>(from.signal_count()));
  for (std::size_t w = 0; w < env.size(); ++w) {
    for (std::size_t s = 0; s < from.signal_count(); ++s) diff[w][s] = to.at(w, s) - from.at(w, s);
  }

  // Steps of 1/N keep every intermediate advantage within D(s)/N of a convex
  // combination of the two endpoint advantages, both of the same sign.
  Rational ratio;
  for (std::size_t s = 0; s < from.signal_count(); ++s) {
    Rational spread;
    for (std::size_t w = 0; w < env.size(); ++w) {
      spread += env.prior(w) * env.state(w).gap().abs() * diff[w][s].abs();
    }
    Rational floor_adv = min(advantage(env, from, s).abs(), advantage(env, to, s).abs());
    ratio = max(ratio, spread / floor_adv);
  }
  mpz_class safe_z;
  mpz_fdiv_q(safe_z.get_mpz_t(), ratio.raw().get_num_mpz_t(), ratio.raw().get_den_mpz_t());
  safe_z += 1;

  for (mpz_class n = 1;; n *= 2) {
    if (n > safe_z) n = safe_z;
    Rational frac(mpq_class(mpz_class(1), n));
    std::vector<std::vector<Rational>> step = diff;
    for (auto& row : step) {
      for (auto& v : row) v *= frac;
    }
    std::vector<Shift> one = step_shifts(env, cf, step);
    std::vector<Shift> all;
    Experiment cur = from;
    bool ok = true;
    try {
      for (mpz_class k = 0; k < n; ++k) {
        for (const auto& s : one) {
          cur = apply(env, cur, s);
          all.push_back(s);
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClassificationChanged || n == safe_z) throw;
      ok = false;
    }
    if (ok) {
      if (!(cur == to)) throw Error(ErrorCode::InvalidArgument, "shift replay did not reach the target");
      result.shifts = std::move(all);
      return result;
    }
  }
}

SufficiencyReport verify_suff(const Environment& env, const Experiment& from, const std::vector<Shift>& shifts) {
  SufficiencyReport r;
  r.final_experiment = replay(env, from, shifts);
  const Experiment& fin = r.final_experiment;
  r.payoff = compare(env, fin, from, OrderingId::ChoicePayoffDom).forward;
  r.expected_confidence = compare(env, fin, from, OrderingId::ExpectedConfidenceDom).forward;
  if (is_indicative(env, from).indicative) r.less_random = compare(env, fin, from, OrderingId::LessRandom).forward;
  r.expected_less_random = compare(env, fin, from, OrderingId::ExpectedLessRandom).forward;
  return r;
}

void write_shifts_csv(std::ostream& os, const std::vector<Shift>& shifts) {
  os << "kind,state,from,to,mass\n";
  for (const auto& s : shifts) {
    os << kind_name(s.kind) << "," << s.state << "," << s.from_signal << "," << s.to_signal << "," << s.mass << "\n";
  }
}

std::vector<Shift> read_shifts_csv(std::istream& is) {
  std::vector<Shift> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("kind,", 0) == 0) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::ParseError, "shift line " + std::to_string(line_no) + ": " + why);
    };
    if (cells.size() != 5) bad("expected 5 fields");
    Shift s;
    if (cells[0] == "aligned") {
      s.kind = ShiftKind::Aligned;
    } else if (cells[0] == "neutral") {
      s.kind = ShiftKind::Neutral;
    } else {
      bad("unknown kind '" + cells[0] + "'");
    }
    try {
      s.state = std::stoul(cells[1]);
      s.from_signal = std::stoul(cells[2]);
      s.to_signal = std::stoul(cells[3]);
    } catch (const std::exception&) {
      bad("bad index");
    }
    s.mass = Rational::parse(cells[4]);
    out.push_back(s);
  }
  return out;
}

}  // namespace bwo
