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

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each suite returns how many instances it checked and a message per
// violated property.

#include <cmath>
#include <string>
#include <vector>

#include "bwo/error.hpp"
#include "bwo/families.hpp"
#include "bwo/infostats.hpp"
#include "bwo/measures.hpp"
#include "bwo/orders.hpp"
#include "bwo/shifts.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace bwo::testing {

struct SuiteResult {
  std::size_t instances = 0;
  std::vector<std::string> failures;
  /// Named counters, e.g. how often an implication's premise held.
  std::vector<std::pair<std::string, std::size_t>> counters;

  bool ok() const { return failures.empty(); }
  void fail(std::size_t i, const std::string& what) {
    if (failures.size() < 20) failures.push_back("instance " + std::to_string(i) + ": " + what);
  }
  void count(const std::string& name) {
    for (auto& [n, c] : counters) {
      if (n == name) {
        ++c;
        return;
      }
    }
    counters.emplace_back(name, 1);
  }
};

inline Option correct_option(const Environment& env, std::size_t w) {
  return env.state(w).gap().sign() > 0 ? Option::X : Option::Y;
}

inline bool no_tie_signals(const std::vector<SignalClass>& classes) {
  for (auto c : classes) {
    if (c == SignalClass::Tie) return false;
  }
  return true;
}

// ─── Identities ───────────────────────────────────────────────────────────

inline SuiteResult identity_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r;
  Gen g(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Environment env = random_env(g, {.max_states = 5, .allow_zero_prior = g.coin(10)});
    const std::size_t k = static_cast<std::size_t>(g.between(1, 4));
    Experiment exp = g.coin(30) ? tie_heavy_exp(g, env, k) : random_exp(g, env.size(), k);
    ++r.instances;

    PayoffReport pay = payoffs(env, exp);
    Rational psi = confidence_overall(env, exp);
    if (psi != pay.psych) r.fail(i, "overall confidence " + psi.str() + " != W_psych " + pay.psych.str());
    if (pay.psych != oracle::psych_payoff(env, exp)) r.fail(i, "W_psych differs from oracle");
    if (pay.total != oracle::payoff(env, exp)) r.fail(i, "W differs from oracle");

    Rational w = wta(env, exp);
    if (w != Rational(2) * (pay.total - oracle::baseline(env))) r.fail(i, "WTA != 2(W - W0)");
    if (w != oracle::wta(env, exp)) r.fail(i, "WTA differs from oracle double sum");

    // Overall confidence is the rho-weighted average of conditional confidence.
    ChoiceProfile prof = induce(env, exp);
    ConfidenceTable cond = confidence_cond(env, exp);
    Rational agg;
    for (std::size_t s = 0; s < env.size(); ++s) {
      for (Option o : {Option::X, Option::Y}) {
        if (cond[idx(o)][s]) agg += env.prior(s) * prof.rho_cond[s][o] * *cond[idx(o)][s];
      }
    }
    if (agg != psi) r.fail(i, "aggregated conditional confidence " + agg.str() + " != " + psi.str());

    for (std::size_t s = 0; s < env.size(); ++s) {
      for (Option o : {Option::X, Option::Y}) {
        if (cond[idx(o)][s] != oracle::conf_cond(env, exp, o, s)) r.fail(i, "conditional confidence differs from oracle");
      }
    }
    auto ce = confidence_exp(env, exp);
    auto ce2 = confidence_exp_by_class(env, exp);
    for (Option o : {Option::X, Option::Y}) {
      if (ce[idx(o)] != oracle::conf_exp(env, exp, o)) r.fail(i, "expected confidence differs from oracle");
      if (ce[idx(o)] != ce2[idx(o)]) r.fail(i, "expected confidence restatement disagrees");
    }

    // Law of total probability.
    std::vector<Rational> rebuilt(env.size());
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      Rational m = signal_marginal(env, exp, s);
      if (m.is_zero()) continue;
      auto post = posterior(env, exp, s);
      for (std::size_t w2 = 0; w2 < env.size(); ++w2) rebuilt[w2] += m * post[w2];
    }
    for (std::size_t w2 = 0; w2 < env.size(); ++w2) {
      if (rebuilt[w2] != env.prior(w2)) r.fail(i, "posterior reconstruction fails at state " + std::to_string(w2));
    }
  }
  return r;
}

// ─── Shifts ───────────────────────────────────────────────────────────────

/// Non-tie environment and experiment with both classes present and no tie
/// signals.
inline std::pair<Environment, Experiment> shift_start(Gen& g) {
  while (true) {
    Environment env = random_env(g, {.max_states = 5, .allow_tie_state = false});
    const std::size_t k = static_cast<std::size_t>(g.between(2, 4));
    Experiment exp = random_exp(g, env.size(), k, 12);
    auto classes = classify_signals(env, exp);
    bool has_x = false, has_y = false;
    for (auto c : classes) {
      has_x = has_x || c == SignalClass::ChoosesX;
      has_y = has_y || c == SignalClass::ChoosesY;
    }
    if (has_x && has_y && no_tie_signals(classes)) return {std::move(env), std::move(exp)};
  }
}

/// Random valid shift, or nullopt when none of the drawn kind exists.
inline std::optional<Shift> random_shift(Gen& g, const Environment& env, const Experiment& exp, ShiftKind kind) {
  auto classes = classify_signals(env, exp);
  std::vector<Shift> candidates;
  for (std::size_t w = 0; w < env.size(); ++w) {
    if (env.state(w).gap().sign() == 0) continue;
    const SignalClass good = class_of(correct_option(env, w));
    for (std::size_t f = 0; f < exp.signal_count(); ++f) {
      if (exp.at(w, f).is_zero()) continue;
      for (std::size_t t = 0; t < exp.signal_count(); ++t) {
        if (t == f) continue;
        bool ok = kind == ShiftKind::Aligned ? (classes[t] == good && classes[f] != good && classes[f] != SignalClass::Tie)
                                             : (classes[t] == classes[f] && classes[f] != SignalClass::Tie);
        if (ok) candidates.push_back({kind, w, f, t, Rational(0)});
      }
    }
  }
  if (candidates.empty()) return std::nullopt;
  Shift s = candidates[static_cast<std::size_t>(g.below(static_cast<long>(candidates.size())))];
  s.mass = exp.at(s.state, s.from_signal) * Rational(g.between(1, 4), 4);
  return s;
}

/// Per-state correct-choice mass comparison: every non-tie state has at least
/// as much mass on correct signals under `to` as under `from`.
inline bool correct_mass_rises(const Environment& env, const Experiment& from, const Experiment& to) {
  auto cf = classify_signals(env, from);
  auto ct = classify_signals(env, to);
  for (std::size_t w = 0; w < env.size(); ++w) {
    if (env.state(w).gap().sign() == 0) continue;
    const SignalClass good = class_of(correct_option(env, w));
    Rational a, b;
    for (std::size_t s = 0; s < from.signal_count(); ++s) {
      if (cf[s] == good) a += from.at(w, s);
      if (ct[s] == good) b += to.at(w, s);
    }
    if (b < a) return false;
  }
  return true;
}

inline SuiteResult shift_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r;
  Gen g(seed);
  for (std::size_t i = 0; i < n; ++i) {
    auto [env, start] = shift_start(g);
    ++r.instances;
    const bool start_indicative = is_indicative(env, start).indicative;
    Experiment cur = start;
    std::vector<Shift> applied;
    const long steps = g.between(1, 6);
    for (long step = 0; step < steps; ++step) {
      ShiftKind kind = g.coin(60) ? ShiftKind::Aligned : ShiftKind::Neutral;
      auto shift = random_shift(g, env, cur, kind);
      if (!shift) continue;
      Experiment next;
      try {
        next = apply(env, cur, *shift);
      } catch (const Error& e) {
        // A neutral shift may push a signal onto a tie; those are rejected.
        if (kind == ShiftKind::Neutral && e.code() == ErrorCode::ClassificationChanged) continue;
        r.fail(i, std::string("valid shift rejected: ") + e.what());
        break;
      }
      Rational w0 = payoffs(env, cur).total;
      Rational w1 = payoffs(env, next).total;
      if (kind == ShiftKind::Aligned) {
        r.count("aligned shifts");
        Rational gain = shift->mass * env.prior(shift->state) * env.state(shift->state).gap().abs();
        if (w1 - w0 != gain) r.fail(i, "aligned shift gain " + (w1 - w0).str() + " != " + gain.str());
        if (gain.sign() > 0 && !(w1 > w0)) r.fail(i, "payoff did not strictly rise");
        if (!compare(env, next, cur, OrderingId::ExpectedConfidenceDom).forward) {
          r.fail(i, "expected confidence fell after an aligned shift");
        }
      } else {
        r.count("neutral shifts");
        if (w1 != w0) r.fail(i, "neutral shift changed the payoff");
      }
      if (is_indicative(env, cur).indicative && !is_indicative(env, next).indicative) {
        r.fail(i, "indicativeness lost");
      }
      applied.push_back(*shift);
      cur = std::move(next);
    }

    if (replay(env, start, applied) != cur) r.fail(i, "replay mismatch");
    if (start_indicative) {
      r.count("indicative starts");
      if (!compare(env, cur, start, OrderingId::LessRandom).forward) r.fail(i, "not less random after shifts");
    }
    SufficiencyReport suff = verify_suff(env, start, applied);
    if (!suff.payoff || !suff.expected_confidence || (start_indicative && !suff.less_random.value_or(false))) {
      r.fail(i, "verify_suff reports a failed part");
    }

    Decomposition d = decompose(env, start, cur);
    if (!d.decomposable) {
      r.fail(i, "shift-reachable target not decomposable: " + d.reason);
    } else if (replay(env, start, d.shifts) != cur) {
      r.fail(i, "decompose then replay does not reproduce the target");
    }

    // Iff condition on an independent random target with the same classes.
    auto classes = classify_signals(env, start);
    for (int attempt = 0; attempt < 50; ++attempt) {
      Experiment other = random_exp(g, env.size(), start.signal_count(), 12);
      if (classify_signals(env, other) != classes) continue;
      r.count("iff pairs");
      bool expect = correct_mass_rises(env, start, other);
      Decomposition dd = decompose(env, start, other);
      if (dd.decomposable != expect) r.fail(i, "decompose disagrees with the per-state condition");
      if (dd.decomposable) {
        r.count("iff pairs decomposable");
        if (replay(env, start, dd.shifts) != other) r.fail(i, "decompose then replay mismatch on random target");
      }
      break;
    }
  }
  return r;
}

// ─── Ordering implications ────────────────────────────────────────────────

inline SuiteResult implication_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r;
  Gen g(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Environment env = random_env(g, {.max_states = 5});
    const std::size_t k = static_cast<std::size_t>(g.between(2, 3));
    Experiment a = random_exp(g, env.size(), k, 10);
    Experiment b = random_exp(g, env.size(), k, 10);
    ++r.instances;

    if (compare(env, a, b, OrderingId::ConfidenceDom).forward) {
      r.count("confidence premise");
      if (!compare(env, a, b, OrderingId::ExpectedConfidenceDom).forward) {
        r.fail(i, "confidence dominance without expected confidence dominance");
      }
    }
    if (compare(env, a, b, OrderingId::StateConditionalPayoffDom).forward) {
      r.count("state payoff premise");
      if (!compare(env, a, b, OrderingId::ChoicePayoffDom).forward) r.fail(i, "state payoff without payoff");
    }
    if (is_indicative(env, a).indicative && is_indicative(env, b).indicative &&
        compare(env, a, b, OrderingId::LessRandom).forward) {
      r.count("indicative less-random premise");
      if (!compare(env, a, b, OrderingId::ChoicePayoffDom).forward) {
        r.fail(i, "indicative and less random without payoff dominance");
      }
    }
    for (const Experiment* e : {&a, &b}) {
      auto classes = classify_signals(env, *e);
      bool some = false;
      for (std::size_t w = 0; w < env.size() && !some; ++w) {
        some = env.state(w).gap().sign() != 0 && env.prior(w).sign() > 0 && indicative_in_state(env, *e, classes, w);
      }
      if (!some) r.fail(i, "experiment indicative in no state");
    }
  }
  return r;
}

// ─── ROC and garbling ─────────────────────────────────────────────────────

inline std::vector<std::vector<Rational>> stacked(const HypothesisDensities& d) { return {d.f_x, d.f_y}; }

inline SuiteResult roc_garbling_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r;
  Gen g(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Environment env = random_env(g, {.max_states = 4, .allow_tie_state = false});
    const std::size_t k = static_cast<std::size_t>(g.between(2, 4));
    Experiment a = random_exp(g, env.size(), k, 10);
    Experiment b = g.coin() ? Experiment(multiply(a.rows(), random_kernel(g, k, static_cast<std::size_t>(g.between(2, 4)))))
                            : random_exp(g, env.size(), static_cast<std::size_t>(g.between(2, 4)), 10);
    ++r.instances;
    HypothesisDensities da = densities(env, a);
    HypothesisDensities db = densities(env, b);
    OrderVerdict v = roc_dominates(roc(da), roc(db));
    bool fwd = find_garbling(stacked(da), stacked(db)).has_value();
    bool bwd = find_garbling(stacked(db), stacked(da)).has_value();
    if (v.forward) r.count("roc forward");
    if (v.forward != fwd) r.fail(i, "ROC forward " + std::to_string(v.forward) + " vs garbling " + std::to_string(fwd));
    if (v.backward != bwd) r.fail(i, "ROC backward " + std::to_string(v.backward) + " vs garbling " + std::to_string(bwd));
  }
  return r;
}

}  // namespace bwo::testing

namespace bwo::testing {

// ─── Families ─────────────────────────────────────────────────────────────

inline const std::vector<double>& luce_grid() {
  static const std::vector<double> grid{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
  return grid;
}

/// Lower lambda dominates higher lambda under payoff, randomness and
/// confidence, for every pair on the grid.
inline SuiteResult luce_chain_suite(const Environment& env) {
  SuiteResult r;
  const auto& grid = luce_grid();
  std::vector<Experiment> exps;
  for (double l : grid) exps.push_back(families::luce(env, l));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!is_indicative(env, exps[i]).indicative) r.fail(i, "luce experiment not indicative");
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      ++r.instances;
      for (OrderingId id : {OrderingId::ChoicePayoffDom, OrderingId::LessRandom, OrderingId::ConfidenceDom}) {
        if (!compare(env, exps[i], exps[j], id).forward) {
          r.fail(i, std::string(ordering_name(id)) + " fails for lambda " + std::to_string(grid[i]) + " vs " +
                        std::to_string(grid[j]));
        }
      }
    }
  }
  return r;
}

inline SuiteResult repeat_suite(std::uint64_t seed, std::size_t n) {
  SuiteResult r;
  Gen g(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Environment env = random_env(g, {.max_states = 4});
    Experiment base = random_exp(g, env.size(), static_cast<std::size_t>(g.between(2, 3)), 10);
    ++r.instances;
    Rational prev = payoffs(env, base).total;
    for (unsigned t = 2; t <= 3; ++t) {
      Rational cur = payoffs(env, families::repeat(base, t)).total;
      if (cur < prev) r.fail(i, "payoff fell from t=" + std::to_string(t - 1) + " to t=" + std::to_string(t));
      prev = cur;
    }
  }
  return r;
}

inline SuiteResult gaussian_suite(double tolerance) {
  SuiteResult r;
  const std::vector<double> alphas{0.05, 0.1, 0.25, 0.5, 1, 2, 4, 8};
  const std::vector<double> gaps{-3, -1, -0.25, 0, 0.25, 1, 3};
  for (double z1 : {0.5, 1.0, 2.0}) {
    for (double du : gaps) {
      double prev = 0;
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        ++r.instances;
        families::GaussianSetup setup{0.0, 1.0, z1, alphas[a]};
        double p = families::gaussian_correct_prob(setup, du);
        double ref = oracle::normal_cdf(du / std::sqrt(2 * alphas[a] * z1));
        if (std::abs(p - ref) > tolerance) r.fail(a, "differs from the reference CDF by " + std::to_string(p - ref));
        if (a > 0 && du > 0 && p > prev) r.fail(a, "not nonincreasing in alpha");
        if (a > 0 && du < 0 && p < prev) r.fail(a, "not nondecreasing in alpha for a negative gap");
        prev = p;
      }
    }
  }
  return r;
}

inline SuiteResult fechner_suite() {
  SuiteResult r;
  const std::vector<double> lambdas{0.25, 0.5, 1, 2, 4, 8};
  for (const char* name : {"logistic", "probit", "clamp"}) {
    families::FechnerSpec spec{families::ResponseFunction::by_name(name), 1.0};
    if (!families::validate(spec).empty()) r.fail(0, std::string(name) + " fails validation");
    for (double ux : {-2.0, -0.5, 0.0, 0.3, 1.0, 3.0}) {
      ++r.instances;
      auto rep = families::fechner_comovement_check(spec, ux, 0.0, lambdas);
      if (!rep.comonotone) r.fail(0, std::string(name) + " not comonotone at ux=" + std::to_string(ux));
    }
  }
  return r;
}

}  // namespace bwo::testing
