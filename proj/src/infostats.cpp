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

#include "bwo/infostats.hpp"

#include <algorithm>
#include <numeric>

#include "bwo/error.hpp"
#include "bwo/lp.hpp"
#include "bwo/measures.hpp"

namespace bwo {

namespace {

// Lambda(a) > Lambda(b), exact and valid for infinite ratios.
bool ratio_greater(const HypothesisDensities& d, std::size_t a, std::size_t b) {
  return d.f_x[a] * d.f_y[b] > d.f_x[b] * d.f_y[a];
}

bool ratio_equal(const HypothesisDensities& d, std::size_t a, std::size_t b) {
  return d.f_x[a] * d.f_y[b] == d.f_x[b] * d.f_y[a];
}

}  // namespace

Rational RocCurve::tpr_at(const Rational& fpr) const {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty ROC curve");
  const RocPoint* below = nullptr;
  std::optional<Rational> exact;
  for (const auto& v : vertices) {
    if (v.fpr == fpr) {
      exact = exact ? max(*exact, v.tpr) : v.tpr;
    } else if (v.fpr < fpr) {
      below = &v;
    } else {
      if (exact) return *exact;
      if (!below) return v.tpr;
      return below->tpr + (v.tpr - below->tpr) * (fpr - below->fpr) / (v.fpr - below->fpr);
    }
  }
  if (exact) return *exact;
  return vertices.back().tpr;
}

HypothesisDensities densities(const Environment& env, const Experiment& exp) {
  check_compatible(env, exp);
  if (env.has_supported_tie_states()) {
    throw Error(ErrorCode::TieStatesPresent, "binary hypothesis densities need tie states of prior 0");
  }
  const Rational half(1, 2);
  if (env.weak_mass(Option::X) != half || env.weak_mass(Option::Y) != half) {
    throw Error(ErrorCode::HypothesisMassNotHalf, "prior mass of the x-correct states is " +
                                                      env.weak_mass(Option::X).str() + ", expected 1/2");
  }
  HypothesisDensities d;
  d.f_x.assign(exp.signal_count(), Rational(0));
  d.f_y.assign(exp.signal_count(), Rational(0));
  for (std::size_t w = 0; w < env.size(); ++w) {
    if (env.prior(w).is_zero()) continue;
    auto& target = env.strictly_optimal(w, Option::X) ? d.f_x : d.f_y;
    for (std::size_t s = 0; s < exp.signal_count(); ++s) target[s] += Rational(2) * env.prior(w) * exp.at(w, s);
  }
  return d;
}

LikelihoodRatio likelihood_ratio(const HypothesisDensities& d) {
  LikelihoodRatio lr;
  for (std::size_t s = 0; s < d.f_x.size(); ++s) {
    bool both_zero = d.f_x[s].is_zero() && d.f_y[s].is_zero();
    lr.defined.push_back(!both_zero);
    if (both_zero || d.f_y[s].is_zero()) {
      lr.value.emplace_back(std::nullopt);
    } else {
      lr.value.emplace_back(d.f_x[s] / d.f_y[s]);
    }
  }
  return lr;
}

std::vector<std::optional<Rational>> evidence(const HypothesisDensities& d) {
  std::vector<std::optional<Rational>> e(d.f_x.size());
  for (std::size_t s = 0; s < d.f_x.size(); ++s) {
    Rational total = d.f_x[s] + d.f_y[s];
    if (total.sign() > 0) e[s] = d.f_x[s] / total;
  }
  return e;
}

RocCurve roc(const HypothesisDensities& d) {
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < d.f_x.size(); ++s) {
    if (!(d.f_x[s].is_zero() && d.f_y[s].is_zero())) order.push_back(s);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ratio_greater(d, a, b); });

  RocCurve curve;
  curve.vertices.push_back({Rational(0), Rational(0)});
  Rational fpr, tpr;
  for (std::size_t k = 0; k < order.size(); ++k) {
    fpr += d.f_y[order[k]];
    tpr += d.f_x[order[k]];
    bool group_ends = k + 1 == order.size() || !ratio_equal(d, order[k], order[k + 1]);
    if (group_ends) curve.vertices.push_back({fpr, tpr});
  }
  return curve;
}

RocCurve roc(const Environment& env, const Experiment& exp) { return roc(densities(env, exp)); }

OrderVerdict roc_dominates(const RocCurve& a, const RocCurve& b) {
  std::vector<Rational> xs;
  for (const auto& v : a.vertices) xs.push_back(v.fpr);
  for (const auto& v : b.vertices) xs.push_back(v.fpr);
  OrderVerdict verdict{true, true};
  for (const auto& x : xs) {
    Rational ta = a.tpr_at(x);
    Rational tb = b.tpr_at(x);
    if (ta < tb) verdict.forward = false;
    if (tb < ta) verdict.backward = false;
  }
  return verdict;
}

RocPoint operating_point(const Environment& env, const Experiment& exp) {
  HypothesisDensities d = densities(env, exp);
  ChoiceProfile p = induce(env, exp);
  RocPoint pt;
  for (std::size_t s = 0; s < exp.signal_count(); ++s) {
    pt.tpr += d.f_x[s] * p.choice_rule[s].x;
    pt.fpr += d.f_y[s] * p.choice_rule[s].x;
  }
  return pt;
}

std::optional<std::vector<std::vector<Rational>>> find_garbling(const std::vector<std::vector<Rational>>& a,
                                                                const std::vector<std::vector<Rational>>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "experiments index different state sets");
  if (a.empty()) return std::vector<std::vector<Rational>>{};
  const std::size_t na = a.front().size();
  const std::size_t nb = b.front().size();
  const std::size_t rows = a.size();

  lp::FeasibilityProblem p;
  auto var = [&](std::size_t i, std::size_t j) { return i * nb + j; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::vector<Rational> eq(na * nb);
      for (std::size_t i = 0; i < na; ++i) eq[var(i, j)] = a[r][i];
      p.a.push_back(std::move(eq));
      p.b.push_back(b[r][j]);
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<Rational> eq(na * nb);
    for (std::size_t j = 0; j < nb; ++j) eq[var(i, j)] = Rational(1);
    p.a.push_back(std::move(eq));
    p.b.push_back(Rational(1));
  }
  auto res = lp::feasible(p);
  if (!res.feasible) return std::nullopt;
  std::vector<std::vector<Rational>> k(na, std::vector<Rational>(nb));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) k[i][j] = res.x[var(i, j)];
  }
  return k;
}

BlackwellVerdict blackwell_dominates(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<std::vector<Rational>>& b) {
  BlackwellVerdict v;
  v.forward_kernel = find_garbling(a, b);
  v.backward_kernel = find_garbling(b, a);
  v.verdict = {v.forward_kernel.has_value(), v.backward_kernel.has_value()};
  return v;
}

BlackwellVerdict blackwell_dominates(const Environment& env, const Experiment& a, const Experiment& b) {
  check_compatible(env, a);
  check_compatible(env, b);
  return blackwell_dominates(a.rows(), b.rows());
}

BlackwellVerdict binary_blackwell(const HypothesisDensities& a, const HypothesisDensities& b) {
  return blackwell_dominates(std::vector<std::vector<Rational>>{a.f_x, a.f_y},
                             std::vector<std::vector<Rational>>{b.f_x, b.f_y});
}

}  // namespace bwo
