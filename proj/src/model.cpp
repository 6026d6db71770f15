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

#include "bwo/model.hpp"

#include <map>
#include <utility>

#include "bwo/error.hpp"

namespace bwo {

Environment::Environment(std::vector<State> states, SymmetryCheck check) : states_(std::move(states)) {
  if (states_.empty()) throw Error(ErrorCode::InvalidEnvironment, "environment needs at least one state");
  Rational total;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].prior.sign() < 0) {
      throw Error(ErrorCode::InvalidEnvironment, "negative prior at state " + std::to_string(i));
    }
    total += states_[i].prior;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::InvalidEnvironment, "priors sum to " + total.str() + ", expected 1");
  }

  std::map<std::pair<std::string, std::string>, Rational> mass;
  for (const auto& st : states_) {
    if (st.prior.is_zero() || st.u_x == st.u_y) continue;
    mass[{st.u_x.str(), st.u_y.str()}] += st.prior;
  }
  for (const auto& [key, m] : mass) {
    auto it = mass.find({key.second, key.first});
    Rational mirrored = it == mass.end() ? Rational(0) : it->second;
    if (mirrored != m) {
      symmetric_ = false;
      if (check == SymmetryCheck::Enforce) {
        throw Error(ErrorCode::AsymmetricPrior, "mass " + m.str() + " on utilities (" + key.first + ", " +
                                                    key.second + ") but " + mirrored.str() + " on the mirror");
      }
      break;
    }
  }
}

StateTag Environment::tag(std::size_t i) const {
  int s = states_.at(i).gap().sign();
  return s > 0 ? StateTag::XBetter : (s < 0 ? StateTag::YBetter : StateTag::Tie);
}

bool Environment::weakly_optimal(std::size_t i, Option o) const {
  const auto& st = states_.at(i);
  return st.utility(o) >= st.utility(other(o));
}

bool Environment::strictly_optimal(std::size_t i, Option o) const {
  const auto& st = states_.at(i);
  return st.utility(o) > st.utility(other(o));
}

bool Environment::has_tie_states() const {
  for (const auto& st : states_) {
    if (st.u_x == st.u_y) return true;
  }
  return false;
}

bool Environment::has_supported_tie_states() const {
  for (const auto& st : states_) {
    if (st.u_x == st.u_y && st.prior.sign() > 0) return true;
  }
  return false;
}

Rational Environment::weak_mass(Option o) const {
  Rational m;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (weakly_optimal(i, o)) m += states_[i].prior;
  }
  return m;
}

Rational Environment::baseline_payoff() const {
  Rational w;
  for (const auto& st : states_) w += st.prior * (st.u_x + st.u_y) / Rational(2);
  return w;
}

Environment Environment::relabeled() const {
  std::vector<State> swapped;
  swapped.reserve(states_.size());
  for (const auto& st : states_) swapped.push_back({st.prior, st.u_y, st.u_x});
  return Environment(std::move(swapped), symmetric_ ? SymmetryCheck::Enforce : SymmetryCheck::Skip);
}

Experiment::Experiment(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::InvalidExperiment, "experiment needs at least one row");
  signals_ = rows_.front().size();
  if (signals_ == 0) throw Error(ErrorCode::InvalidExperiment, "experiment needs at least one signal");
  for (std::size_t w = 0; w < rows_.size(); ++w) {
    if (rows_[w].size() != signals_) {
      throw Error(ErrorCode::InvalidExperiment, "row " + std::to_string(w) + " has " +
                                                    std::to_string(rows_[w].size()) + " entries, expected " +
                                                    std::to_string(signals_));
    }
    Rational sum;
    for (std::size_t s = 0; s < signals_; ++s) {
      const Rational& p = rows_[w][s];
      if (p.sign() < 0 || p > Rational(1)) {
        throw Error(ErrorCode::InvalidExperiment,
                    "entry (" + std::to_string(w) + ", " + std::to_string(s) + ") = " + p.str() + " outside [0,1]");
      }
      sum += p;
    }
    if (sum != Rational(1)) {
      throw Error(ErrorCode::InvalidExperiment, "row " + std::to_string(w) + " sums to " + sum.str());
    }
  }
}

Experiment Experiment::uninformative(std::size_t states, std::size_t signals) {
  std::vector<std::vector<Rational>> rows(states, std::vector<Rational>(signals, Rational(1, static_cast<long>(signals))));
  return Experiment(std::move(rows));
}

std::string_view signal_class_name(SignalClass c) {
  switch (c) {
    case SignalClass::ChoosesX: return "x";
    case SignalClass::ChoosesY: return "y";
    case SignalClass::Tie: return "tie";
  }
  return "?";
}

void check_compatible(const Environment& env, const Experiment& exp) {
  if (env.size() != exp.state_count()) {
    throw Error(ErrorCode::DimensionMismatch, "experiment has " + std::to_string(exp.state_count()) +
                                                  " rows but environment has " + std::to_string(env.size()) +
                                                  " states");
  }
}

Rational advantage(const Environment& env, const Experiment& exp, std::size_t s) {
  check_compatible(env, exp);
  if (s >= exp.signal_count()) throw Error(ErrorCode::InvalidArgument, "signal index out of range");
  Rational d;
  for (std::size_t w = 0; w < env.size(); ++w) d += env.prior(w) * exp.at(w, s) * env.state(w).gap();
  return d;
}

std::vector<SignalClass> classify_signals(const Environment& env, const Experiment& exp) {
  std::vector<SignalClass> out(exp.signal_count());
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    int sign = advantage(env, exp, s).sign();
    out[s] = sign > 0 ? SignalClass::ChoosesX : (sign < 0 ? SignalClass::ChoosesY : SignalClass::Tie);
  }
  return out;
}

Rational signal_marginal(const Environment& env, const Experiment& exp, std::size_t s) {
  check_compatible(env, exp);
  Rational m;
  for (std::size_t w = 0; w < env.size(); ++w) m += env.prior(w) * exp.at(w, s);
  return m;
}

std::vector<Rational> posterior(const Environment& env, const Experiment& exp, std::size_t s) {
  Rational m = signal_marginal(env, exp, s);
  if (m.is_zero()) {
    throw Error(ErrorCode::ZeroProbabilitySignal, "signal " + std::to_string(s) + " has zero probability");
  }
  std::vector<Rational> post(env.size());
  for (std::size_t w = 0; w < env.size(); ++w) post[w] = env.prior(w) * exp.at(w, s) / m;
  return post;
}

ChoiceProfile induce(const Environment& env, const Experiment& exp) {
  check_compatible(env, exp);
  ChoiceProfile p;
  p.classes = classify_signals(env, exp);
  p.choice_rule.resize(exp.signal_count());
  const Rational half(1, 2);
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    switch (p.classes[s]) {
      case SignalClass::ChoosesX: p.choice_rule[s] = {Rational(1), Rational(0)}; break;
      case SignalClass::ChoosesY: p.choice_rule[s] = {Rational(0), Rational(1)}; break;
      case SignalClass::Tie: p.choice_rule[s] = {half, half}; break;
    }
  }
  p.rho_cond.resize(env.size());
  for (std::size_t w = 0; w < env.size(); ++w) {
    Split r;
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      r.x += exp.at(w, s) * p.choice_rule[s].x;
      r.y += exp.at(w, s) * p.choice_rule[s].y;
    }
    p.rho_cond[w] = r;
    p.rho_marg.x += env.prior(w) * r.x;
    p.rho_marg.y += env.prior(w) * r.y;
  }
  return p;
}

}  // namespace bwo
