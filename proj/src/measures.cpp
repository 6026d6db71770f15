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

#include "bwo/measures.hpp"

#include <ostream>

namespace bwo {

namespace {

constexpr std::array<Option, 2> kOptions{Option::X, Option::Y};

const char* option_name(Option o) { return o == Option::X ? "x" : "y"; }

// Prior mass of the weak optimality set of `o` jointly with signal s.
Rational joint_correct(const Environment& env, const Experiment& exp, std::size_t s, Option o) {
  Rational m;
  for (std::size_t w = 0; w < env.size(); ++w) {
    if (env.weakly_optimal(w, o)) m += env.prior(w) * exp.at(w, s);
  }
  return m;
}

}  // namespace

RandomnessReport randomness(const ChoiceProfile& profile) {
  RandomnessReport r;
  r.by_state.reserve(profile.rho_cond.size());
  for (const auto& split : profile.rho_cond) r.by_state.push_back(split.max());
  r.expected = profile.rho_marg.max();
  return r;
}

ConfidenceTable confidence_cond(const Environment& env, const Experiment& exp) {
  ChoiceProfile p = induce(env, exp);
  const std::size_t n = env.size();
  const std::size_t k = exp.signal_count();

  std::vector<Rational> marginal(k);
  std::vector<Split> post_correct(k);
  for (std::size_t s = 0; s < k; ++s) {
    marginal[s] = signal_marginal(env, exp, s);
    if (marginal[s].is_zero()) continue;
    for (Option o : kOptions) post_correct[s][o] = joint_correct(env, exp, s, o) / marginal[s];
  }

  ConfidenceTable table;
  for (Option o : kOptions) {
    auto& column = table[idx(o)];
    column.assign(n, std::nullopt);
    for (std::size_t w = 0; w < n; ++w) {
      Rational num, den;
      for (std::size_t s = 0; s < k; ++s) {
        if (marginal[s].is_zero()) continue;
        Rational weight = exp.at(w, s) * p.choice_rule[s][o];
        den += weight;
        num += weight * post_correct[s][o];
      }
      if (den.sign() > 0) column[w] = num / den;
    }
  }
  return table;
}

std::array<MaybeRational, 2> confidence_exp(const Environment& env, const Experiment& exp) {
  ChoiceProfile p = induce(env, exp);
  std::array<MaybeRational, 2> out;
  for (Option o : kOptions) {
    if (p.rho_marg[o].is_zero()) continue;
    // sum_w pi(w) sum_s sigma(s|w) c(o|s) pi(W^(o)|s) collapses to
    // sum_s c(o|s) pi(W^(o), s).
    Rational num;
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      num += p.choice_rule[s][o] * joint_correct(env, exp, s, o);
    }
    out[idx(o)] = num / p.rho_marg[o];
  }
  return out;
}

std::array<MaybeRational, 2> confidence_exp_by_class(const Environment& env, const Experiment& exp) {
  auto classes = classify_signals(env, exp);
  const Rational half(1, 2);
  std::array<MaybeRational, 2> out;
  for (Option o : kOptions) {
    Rational num, den;
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      Rational weight;
      if (classes[s] == class_of(o)) {
        weight = Rational(1);
      } else if (classes[s] == SignalClass::Tie) {
        weight = half;
      } else {
        continue;
      }
      for (std::size_t w = 0; w < env.size(); ++w) {
        Rational mass = env.prior(w) * exp.at(w, s);
        den += weight * mass;
        if (env.weakly_optimal(w, o)) num += weight * mass;
      }
    }
    if (den.sign() > 0) out[idx(o)] = num / den;
  }
  return out;
}

Rational confidence_overall(const Environment& env, const Experiment& exp) {
  ChoiceProfile p = induce(env, exp);
  auto conf = confidence_exp(env, exp);
  Rational total;
  for (Option o : kOptions) {
    if (conf[idx(o)]) total += p.rho_marg[o] * *conf[idx(o)];
  }
  return total;
}

PayoffReport payoffs(const Environment& env, const Experiment& exp) {
  ChoiceProfile p = induce(env, exp);
  PayoffReport r;
  r.by_state.resize(env.size());
  for (std::size_t w = 0; w < env.size(); ++w) {
    const State& st = env.state(w);
    Rational v, psych;
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      for (Option o : kOptions) {
        Rational mass = exp.at(w, s) * p.choice_rule[s][o];
        v += mass * st.utility(o);
        if (env.weakly_optimal(w, o)) psych += mass;
      }
    }
    r.by_state[w] = v;
    r.total += st.prior * v;
    r.psych += st.prior * psych;
  }
  return r;
}

std::vector<std::optional<Split>> signal_payoffs(const Environment& env, const Experiment& exp) {
  std::vector<std::optional<Split>> out(exp.signal_count());
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    Rational m = signal_marginal(env, exp, s);
    if (m.is_zero()) continue;
    Split v;
    for (std::size_t w = 0; w < env.size(); ++w) {
      Rational mass = env.prior(w) * exp.at(w, s);
      v.x += mass * env.state(w).u_x;
      v.y += mass * env.state(w).u_y;
    }
    v.x /= m;
    v.y /= m;
    out[s] = v;
  }
  return out;
}

std::vector<std::optional<Split>> signal_correctness(const Environment& env, const Experiment& exp) {
  std::vector<std::optional<Split>> out(exp.signal_count());
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    Rational m = signal_marginal(env, exp, s);
    if (m.is_zero()) continue;
    out[s] = Split{joint_correct(env, exp, s, Option::X) / m, joint_correct(env, exp, s, Option::Y) / m};
  }
  return out;
}

Rational wta(const Environment& env, const Experiment& exp) {
  auto classes = classify_signals(env, exp);
  Rational total;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    if (classes[s] == SignalClass::Tie) continue;
    for (std::size_t w = 0; w < env.size(); ++w) {
      Rational gain = classes[s] == SignalClass::ChoosesX ? env.state(w).gap() : -env.state(w).gap();
      total += gain * exp.at(w, s) * env.prior(w);
    }
  }
  return total;
}

std::vector<Rational> choose_x_prob(const Environment& env, const Experiment& exp) {
  check_compatible(env, exp);
  auto classes = classify_signals(env, exp);
  const Rational half(1, 2);
  std::vector<Rational> out(env.size());
  for (std::size_t w = 0; w < env.size(); ++w) {
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      if (classes[s] == SignalClass::ChoosesX) {
        out[w] += exp.at(w, s);
      } else if (classes[s] == SignalClass::Tie) {
        out[w] += half * exp.at(w, s);
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> attenuation_deltas(const Environment& env, const Experiment& exp) {
  auto px = choose_x_prob(env, exp);
  std::vector<std::vector<Rational>> d(px.size(), std::vector<Rational>(px.size()));
  for (std::size_t i = 0; i < px.size(); ++i) {
    for (std::size_t j = 0; j < px.size(); ++j) d[i][j] = px[i] - px[j];
  }
  return d;
}

MeasureReport measure(const Environment& env, const Experiment& exp) {
  MeasureReport r;
  r.profile = induce(env, exp);
  r.randomness = randomness(r.profile);
  r.conf_cond = confidence_cond(env, exp);
  r.conf_exp = confidence_exp(env, exp);
  r.conf_overall = confidence_overall(env, exp);
  r.payoff = payoffs(env, exp);
  r.wta = wta(env, exp);
  r.attenuation = attenuation_deltas(env, exp);
  return r;
}

std::string format_value(const MaybeRational& v) {
  if (!v) return "undefined";
  return v->str() + " (" + v->decimal(6) + ")";
}

void write_report(std::ostream& os, const MeasureReport& r) {
  const std::size_t n = r.profile.rho_cond.size();
  const std::size_t k = r.profile.classes.size();
  os << "states = " << n << "\n";
  os << "signals = " << k << "\n";
  for (std::size_t s = 0; s < k; ++s) os << "class[" << s << "] = " << signal_class_name(r.profile.classes[s]) << "\n";
  for (std::size_t w = 0; w < n; ++w) {
    os << "rho_x[" << w << "] = " << format_value(r.profile.rho_cond[w].x) << "\n";
  }
  os << "rho_x = " << format_value(r.profile.rho_marg.x) << "\n";
  for (std::size_t w = 0; w < n; ++w) os << "randomness[" << w << "] = " << format_value(r.randomness.by_state[w]) << "\n";
  os << "expected_randomness = " << format_value(r.randomness.expected) << "\n";
  for (Option o : kOptions) {
    for (std::size_t w = 0; w < n; ++w) {
      os << "conf_cond[" << option_name(o) << "][" << w << "] = " << format_value(r.conf_cond[idx(o)][w]) << "\n";
    }
  }
  for (Option o : kOptions) os << "conf_exp[" << option_name(o) << "] = " << format_value(r.conf_exp[idx(o)]) << "\n";
  os << "conf_overall = " << format_value(r.conf_overall) << "\n";
  for (std::size_t w = 0; w < n; ++w) os << "W_cond[" << w << "] = " << format_value(r.payoff.by_state[w]) << "\n";
  os << "W = " << format_value(r.payoff.total) << "\n";
  os << "W_psych = " << format_value(r.payoff.psych) << "\n";
  os << "WTA = " << format_value(r.wta) << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      os << "attenuation[" << i << "][" << j << "] = " << format_value(r.attenuation[i][j]) << "\n";
    }
  }
}

void write_state_csv(std::ostream& os, const Environment& env, const MeasureReport& r) {
  auto cell = [](const MaybeRational& v) { return v ? v->str() : std::string(); };
  os << "state,prior,u_x,u_y,rho_x,rho_y,randomness,conf_x,conf_y,W_cond\n";
  for (std::size_t w = 0; w < env.size(); ++w) {
    const State& st = env.state(w);
    os << w << "," << st.prior << "," << st.u_x << "," << st.u_y << "," << r.profile.rho_cond[w].x << ","
       << r.profile.rho_cond[w].y << "," << r.randomness.by_state[w] << "," << cell(r.conf_cond[0][w]) << ","
       << cell(r.conf_cond[1][w]) << "," << r.payoff.by_state[w] << "\n";
  }
}

void write_pair_csv(std::ostream& os, const MeasureReport& r) {
  os << "i,j,delta\n";
  for (std::size_t i = 0; i < r.attenuation.size(); ++i) {
    for (std::size_t j = 0; j < r.attenuation.size(); ++j) {
      if (i != j) os << i << "," << j << "," << r.attenuation[i][j] << "\n";
    }
  }
}

}  // namespace bwo
