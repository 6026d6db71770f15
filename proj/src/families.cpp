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

#include "bwo/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "bwo/error.hpp"

namespace bwo::families {

namespace {

double logistic_fn(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  double e = std::exp(s);
  return e / (1.0 + e);
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

unsigned long snap_precision() {
  if (const char* v = std::getenv("BWO_PRECISION")) {
    char* end = nullptr;
    unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return n;
  }
  return kDefaultPrecision;
}

Experiment luce(const Environment& env, double lambda, unsigned long max_den) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::NonPositiveLambda, "lambda must be positive, got " + std::to_string(lambda));
  }
  std::vector<std::vector<Rational>> rows;
  const Rational half(1, 2);
  for (const auto& st : env.states()) {
    int sign = st.gap().sign();
    Rational p = half;
    if (sign != 0) {
      double g = std::abs(st.gap().to_double());
      Rational strong = Rational::nearest(logistic_fn(g / lambda), max_den);
      p = sign > 0 ? strong : Rational(1) - strong;
    }
    rows.push_back({p, Rational(1) - p});
  }
  return Experiment(std::move(rows));
}

Experiment repeat(const Experiment& exp, unsigned t, std::size_t budget) {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
  const std::size_t k = exp.signal_count();
  std::size_t total = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (total > budget / k) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(k) + "^" + std::to_string(t) + " signals exceed budget " +
                                                 std::to_string(budget));
    }
    total *= k;
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t w = 0; w < exp.state_count(); ++w) {
    std::vector<Rational> row{Rational(1)};
    for (unsigned i = 0; i < t; ++i) {
      std::vector<Rational> next;
      next.reserve(row.size() * k);
      for (const auto& prefix : row) {
        for (std::size_t s = 0; s < k; ++s) next.push_back(prefix * exp.at(w, s));
      }
      row = std::move(next);
    }
    rows.push_back(std::move(row));
  }
  return Experiment(std::move(rows));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gaussian_correct_prob(const GaussianSetup& setup, double du) {
  if (!(setup.z0 > 0) || !(setup.z1 > 0) || !(setup.alpha > 0)) {
    throw Error(ErrorCode::NonPositiveVariance, "z0, z1 and alpha must be positive");
  }
  return normal_cdf(du / std::sqrt(2.0 * setup.alpha * setup.z1));
}

ResponseFunction ResponseFunction::logistic() { return {"logistic", logistic_fn}; }

ResponseFunction ResponseFunction::probit() { return {"probit", normal_cdf}; }

ResponseFunction ResponseFunction::piecewise_linear_clamp() {
  return {"clamp", [](double s) { return std::clamp(0.5 + s / 4.0, 0.0, 1.0); }};
}

ResponseFunction ResponseFunction::by_name(const std::string& name) {
  if (name == "logistic") return logistic();
  if (name == "probit") return probit();
  if (name == "clamp") return piecewise_linear_clamp();
  throw Error(ErrorCode::InvalidArgument, "unknown response function '" + name + "'");
}

std::vector<std::string> validate(const FechnerSpec& spec) {
  std::vector<std::string> issues;
  if (!(spec.lambda > 0)) issues.push_back("lambda must be positive");
  if (!spec.f.f) {
    issues.push_back("missing response function");
    return issues;
  }
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int i = -800; i <= 800; ++i) {
    double s = i / 100.0;
    double v = spec.f.f(s);
    if (!(v >= 0.0 && v <= 1.0)) {
      issues.push_back("value outside [0,1] at s=" + std::to_string(s));
      break;
    }
    if (std::abs(spec.f.f(-s) - (1.0 - v)) > 1e-12) {
      issues.push_back("not symmetric at s=" + std::to_string(s));
      break;
    }
    // Strictness is only checked where f is interior and not saturated in
    // double precision.
    const double eps = 1e-12;
    if (i > -800 && std::min(v, 1.0 - v) > eps && std::min(prev, 1.0 - prev) > eps && !(v > prev)) {
      issues.push_back("not strictly increasing at s=" + std::to_string(s));
      break;
    }
    prev = v;
  }
  return issues;
}

double fechner_choose_prob(const FechnerSpec& spec, double ux, double uy) {
  return spec.f.f((ux - uy) / spec.lambda);
}

ComovementReport fechner_comovement_check(const FechnerSpec& spec, double ux, double uy,
                                          const std::vector<double>& lambda_grid) {
  ComovementReport r;
  for (double lambda : lambda_grid) {
    FechnerSpec at{spec.f, lambda};
    double p = fechner_choose_prob(at, ux, uy);
    r.distance.push_back(std::abs(p - 0.5));
    r.payoff.push_back(ux * p + uy * (1.0 - p));
  }
  auto geq = [](double a, double b) { return a >= b || near(a, b); };
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    for (std::size_t j = 0; j < lambda_grid.size(); ++j) {
      bool lhs = geq(r.distance[i], r.distance[j]);
      bool rhs = geq(r.payoff[i], r.payoff[j]);
      if (lhs != rhs) {
        r.comonotone = false;
        r.violations.push_back("lambda " + std::to_string(lambda_grid[i]) + " vs " + std::to_string(lambda_grid[j]) +
                               ": distance " + (lhs ? ">=" : "<") + ", payoff " + (rhs ? ">=" : "<"));
      }
    }
  }
  return r;
}

double fechner_cross_partial(const FechnerSpec& spec, double ux, double uy, double lambda, double step) {
  const double h = step * std::max(1.0, std::abs(ux));
  const double k = step * lambda;
  auto p = [&](double x, double l) { return spec.f.f((x - uy) / l); };
  return (p(ux + h, lambda + k) - p(ux + h, lambda - k) - p(ux - h, lambda + k) + p(ux - h, lambda - k)) /
         (4.0 * h * k);
}

std::vector<int> fechner_crosspartial_sign(const FechnerSpec& spec, const std::vector<double>& ux_grid, double uy,
                                           double lambda, double step) {
  std::vector<int> out;
  for (double ux : ux_grid) {
    double v = fechner_cross_partial(spec, ux, uy, lambda, step);
    out.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return out;
}

double fechner_sign_change(const FechnerSpec& spec, double uy, double lambda, double lo, double hi, double tol,
                           double step) {
  auto g = [&](double s) { return fechner_cross_partial(spec, uy + s * lambda, uy, lambda, step); };
  double glo = g(lo);
  double ghi = g(hi);
  if ((glo > 0) == (ghi > 0)) throw Error(ErrorCode::InvalidArgument, "no sign change in the bracket");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double cmc_cost(const Environment& env, const Experiment& exp, const std::vector<std::vector<double>>& beta) {
  check_compatible(env, exp);
  const std::size_t n = env.size();
  if (beta.size() != n) throw Error(ErrorCode::DimensionMismatch, "beta must be |states| x |states|");
  const double inf = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "beta must be |states| x |states|");
    for (std::size_t j = 0; j < n; ++j) {
      double b = beta[i][j];
      if (b < 0 || std::isnan(b)) throw Error(ErrorCode::InvalidArgument, "beta entries must be nonnegative");
      if (b == 0.0) continue;
      double kl = 0.0;
      for (std::size_t s = 0; s < exp.signal_count(); ++s) {
        const Rational& p = exp.at(i, s);
        const Rational& q = exp.at(j, s);
        if (p.is_zero()) continue;
        if (q.is_zero()) {
          kl = inf;
          break;
        }
        kl += p.to_double() * std::log((p / q).to_double());
      }
      if (kl == 0.0) continue;
      total += b * kl;
    }
  }
  return total;
}

}  // namespace bwo::families
