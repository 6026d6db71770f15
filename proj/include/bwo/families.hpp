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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bwo/model.hpp"

namespace bwo::families {

inline constexpr unsigned long kDefaultPrecision = 1000000;
inline constexpr std::size_t kDefaultRepeatBudget = 4096;

/// Denominator bound for snapping floating rows to rationals: BWO_PRECISION
/// when set to a positive integer, else kDefaultPrecision.
unsigned long snap_precision();

/// Two-signal logit experiment: sigma(s1|w) = 1 / (1 + exp((u_y - u_x)/lambda)),
/// snapped to the closest rational with denominator <= max_den. Mirrored
/// states get exactly complementary rows. Throws NonPositiveLambda.
Experiment luce(const Environment& env, double lambda, unsigned long max_den = snap_precision());

/// t independent draws: signals are t-tuples in lexicographic order (first
/// draw most significant). Throws BudgetExceeded when |S|^t > budget.
Experiment repeat(const Experiment& exp, unsigned t, std::size_t budget = kDefaultRepeatBudget);

struct GaussianSetup {
  double mu = 0.0;
  double z0 = 1.0;
  double z1 = 1.0;
  double alpha = 1.0;
};

/// Standard normal CDF.
double normal_cdf(double x);

/// Phi(du / sqrt(2 alpha z1)). Throws NonPositiveVariance unless z0, z1 and
/// alpha are positive.
double gaussian_correct_prob(const GaussianSetup& setup, double du);

struct ResponseFunction {
  std::string name;
  std::function<double(double)> f;

  static ResponseFunction logistic();
  static ResponseFunction probit();
  /// clamp(1/2 + s/4, 0, 1).
  static ResponseFunction piecewise_linear_clamp();
  /// "logistic", "probit" or "clamp".
  static ResponseFunction by_name(const std::string& name);
};

struct FechnerSpec {
  ResponseFunction f;
  double lambda = 1.0;
};

/// Sampling checks on [-8, 8]: range within [0,1], f(-s) = 1 - f(s), strictly
/// increasing wherever f is interior to (0,1), and lambda > 0. Returns the
/// problems found.
std::vector<std::string> validate(const FechnerSpec& spec);

/// f((ux - uy) / lambda).
double fechner_choose_prob(const FechnerSpec& spec, double ux, double uy);

struct ComovementReport {
  bool comonotone = true;
  std::vector<double> distance;  ///< |P(x) - 1/2| per lambda
  std::vector<double> payoff;    ///< ux P(x) + uy (1 - P(x)) per lambda
  std::vector<std::string> violations;
};

/// For every pair of grid points, distance-from-1/2 ordering must match the
/// payoff ordering. Differences within a relative 1e-12 count as ties.
ComovementReport fechner_comovement_check(const FechnerSpec& spec, double ux, double uy,
                                          const std::vector<double>& lambda_grid);

/// Central-difference estimate of d^2 P / (d ux d lambda); steps are
/// `step * max(1, |ux|)` and `step * lambda`.
double fechner_cross_partial(const FechnerSpec& spec, double ux, double uy, double lambda, double step = 1e-4);

/// Sign (-1, 0, +1) of the cross partial at each ux.
std::vector<int> fechner_crosspartial_sign(const FechnerSpec& spec, const std::vector<double>& ux_grid, double uy,
                                           double lambda, double step = 1e-4);

/// Bisection for the sign change of the cross partial in the normalized gap
/// s = (ux - uy)/lambda within [lo, hi]. Throws InvalidArgument when the
/// signs at the ends agree.
double fechner_sign_change(const FechnerSpec& spec, double uy, double lambda, double lo, double hi,
                           double tol = 1e-10, double step = 1e-4);

/// sum_ij beta_ij KL(sigma_i || sigma_j) with 0 log(0/q) = 0, p log(p/0) = inf
/// for p > 0, and 0 * inf = 0 in either order.
double cmc_cost(const Environment& env, const Experiment& exp, const std::vector<std::vector<double>>& beta);

}  // namespace bwo::families
