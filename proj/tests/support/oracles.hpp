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

// Reference computations written directly from the definitions, without the
// library's measure code. Used to cross-check the library on random inputs.

#include <cmath>
#include <optional>
#include <vector>

#include "bwo/model.hpp"

namespace bwo::oracle {

struct Joint {
  std::vector<std::vector<Rational>> p;  ///< [state][signal] = pi(w) sigma(s|w)
  std::vector<Rational> marginal;        ///< per signal
};

inline Joint joint(const Environment& env, const Experiment& exp) {
  Joint j;
  j.p.assign(env.size(), std::vector<Rational>(exp.signal_count()));
  j.marginal.assign(exp.signal_count(), Rational(0));
  for (std::size_t w = 0; w < env.size(); ++w) {
    for (std::size_t s = 0; s < exp.signal_count(); ++s) {
      j.p[w][s] = env.prior(w) * exp.at(w, s);
      j.marginal[s] += j.p[w][s];
    }
  }
  return j;
}

/// Probability of choosing x after each signal: 1, 0 or 1/2 by the sign of
/// the posterior expected utility difference.
inline std::vector<Rational> choose_x_after(const Environment& env, const Experiment& exp) {
  Joint j = joint(env, exp);
  std::vector<Rational> c;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    Rational ex, ey;
    for (std::size_t w = 0; w < env.size(); ++w) {
      ex += j.p[w][s] * env.state(w).u_x;
      ey += j.p[w][s] * env.state(w).u_y;
    }
    c.push_back(ex > ey ? Rational(1) : (ex < ey ? Rational(0) : Rational(1, 2)));
  }
  return c;
}

inline Rational chose(const Rational& cx, Option o) { return o == Option::X ? cx : Rational(1) - cx; }

inline bool correct(const State& st, Option o) {
  return o == Option::X ? st.u_x >= st.u_y : st.u_y >= st.u_x;
}

inline Rational payoff(const Environment& env, const Experiment& exp) {
  auto c = choose_x_after(env, exp);
  Joint j = joint(env, exp);
  Rational total;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    for (std::size_t w = 0; w < env.size(); ++w) {
      total += j.p[w][s] * (c[s] * env.state(w).u_x + (Rational(1) - c[s]) * env.state(w).u_y);
    }
  }
  return total;
}

/// Probability of a correct choice, ties counting as correct for both options.
inline Rational psych_payoff(const Environment& env, const Experiment& exp) {
  auto c = choose_x_after(env, exp);
  Joint j = joint(env, exp);
  Rational total;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    for (std::size_t w = 0; w < env.size(); ++w) {
      for (Option o : {Option::X, Option::Y}) {
        if (correct(env.state(w), o)) total += j.p[w][s] * chose(c[s], o);
      }
    }
  }
  return total;
}

/// Posterior probability that `o` is weakly optimal after signal s.
inline std::optional<Rational> belief_correct(const Environment& env, const Joint& j, std::size_t s, Option o) {
  if (j.marginal[s].is_zero()) return std::nullopt;
  Rational num;
  for (std::size_t w = 0; w < env.size(); ++w) {
    if (correct(env.state(w), o)) num += j.p[w][s];
  }
  return num / j.marginal[s];
}

/// psi(o|w), enumerated signal by signal.
inline std::optional<Rational> conf_cond(const Environment& env, const Experiment& exp, Option o, std::size_t w) {
  auto c = choose_x_after(env, exp);
  Joint j = joint(env, exp);
  Rational num, den;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    auto b = belief_correct(env, j, s, o);
    if (!b) continue;
    Rational m = exp.at(w, s) * chose(c[s], o);
    num += m * *b;
    den += m;
  }
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

/// psi(o): probability that o is correct, conditional on choosing o.
inline std::optional<Rational> conf_exp(const Environment& env, const Experiment& exp, Option o) {
  auto c = choose_x_after(env, exp);
  Joint j = joint(env, exp);
  Rational num, den;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    for (std::size_t w = 0; w < env.size(); ++w) {
      Rational m = j.p[w][s] * chose(c[s], o);
      den += m;
      if (correct(env.state(w), o)) num += m;
    }
  }
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

/// Willingness to accept: sum over signals of the posterior utility gap of
/// the chosen option over the other, weighted by signal probability.
inline Rational wta(const Environment& env, const Experiment& exp) {
  auto c = choose_x_after(env, exp);
  Joint j = joint(env, exp);
  Rational total;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    Rational gap;
    for (std::size_t w = 0; w < env.size(); ++w) gap += j.p[w][s] * env.state(w).gap();
    total += c[s] * gap - (Rational(1) - c[s]) * gap;
  }
  return total;
}

inline Rational baseline(const Environment& env) {
  Rational w0;
  for (const auto& st : env.states()) w0 += st.prior * (st.u_x + st.u_y) / Rational(2);
  return w0;
}

/// Standard normal CDF: Maclaurin series of erf for |x| <= 3, Lentz continued
/// fraction for erfc beyond.
inline double normal_cdf(double x) {
  const long double z = static_cast<long double>(x) / std::sqrt(2.0L);
  const long double pi = 3.14159265358979323846264338327950288L;
  if (std::fabs(static_cast<double>(z)) <= 3.0L / std::sqrt(2.0L) + 1e-12L) {
    long double term = z, sum = z;
    for (int n = 1; n < 200; ++n) {
      term *= -z * z / n;
      long double add = term / (2 * n + 1);
      sum += add;
      if (std::fabs(static_cast<double>(add)) < 1e-30) break;
    }
    return static_cast<double>(0.5L + sum / std::sqrt(pi));
  }
  const long double a = std::fabs(z);
  // erfc(a) = exp(-a^2)/sqrt(pi) * 1/(a + 1/2/(a + 1/(a + 3/2/(a + ...))))
  long double f = a, c = a, d = 0;
  for (int n = 1; n < 500; ++n) {
    long double an = n / 2.0L;
    d = a + an * d;
    d = 1 / d;
    c = a + an / c;
    long double delta = c * d;
    f *= delta;
    if (std::fabs(static_cast<double>(delta - 1)) < 1e-19) break;
  }
  long double erfc = std::exp(-a * a) / std::sqrt(pi) / f;
  return static_cast<double>(z > 0 ? 1 - erfc / 2 : erfc / 2);
}

/// Root of k tanh(k/2) = 1 by bisection.
inline double kappa_star() {
  double lo = 0.5, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid * std::tanh(mid / 2) - 1 < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bwo::oracle
