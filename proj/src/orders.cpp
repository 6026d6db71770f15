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

#include "bwo/orders.hpp"

#include "bwo/error.hpp"
#include "bwo/infostats.hpp"

namespace bwo {

namespace {

struct NameEntry {
  OrderingId id;
  std::string_view name;
};

constexpr std::array<NameEntry, 12> kNames{{
    {OrderingId::LessRandom, "less-random"},
    {OrderingId::ExpectedLessRandom, "expected-less-random"},
    {OrderingId::ConfidenceDom, "confidence"},
    {OrderingId::ExpectedConfidenceDom, "expected-confidence"},
    {OrderingId::OverallConfidenceDom, "overall-confidence"},
    {OrderingId::ChoicePayoffDom, "payoff"},
    {OrderingId::StateConditionalPayoffDom, "state-payoff"},
    {OrderingId::PsychPayoffDom, "psych-payoff"},
    {OrderingId::WtaOrder, "wta"},
    {OrderingId::LessAttenuated, "less-attenuated"},
    {OrderingId::BlackwellDom, "blackwell"},
    {OrderingId::RocDom, "roc"},
}};

// Weak "a >= b" on a scalar, both ways.
OrderVerdict scalar(const Rational& a, const Rational& b) { return {a >= b, b >= a}; }

OrderVerdict pointwise(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  OrderVerdict v{true, true};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) v.forward = false;
    if (b[i] < a[i]) v.backward = false;
  }
  return v;
}

// Options chosen with positive probability under both experiments.
std::vector<Option> shared_options(const MeasureReport& a, const MeasureReport& b) {
  std::vector<Option> out;
  for (Option o : {Option::X, Option::Y}) {
    if (a.profile.rho_marg[o].sign() > 0 && b.profile.rho_marg[o].sign() > 0) out.push_back(o);
  }
  return out;
}

OrderVerdict confidence_verdict(const MeasureReport& a, const MeasureReport& b) {
  OrderVerdict v{true, true};
  for (Option o : shared_options(a, b)) {
    const auto& ca = a.conf_cond[idx(o)];
    const auto& cb = b.conf_cond[idx(o)];
    for (std::size_t w = 0; w < ca.size(); ++w) {
      if (!ca[w] || !cb[w]) continue;
      if (*ca[w] < *cb[w]) v.forward = false;
      if (*cb[w] < *ca[w]) v.backward = false;
    }
  }
  return v;
}

OrderVerdict expected_confidence_verdict(const MeasureReport& a, const MeasureReport& b) {
  OrderVerdict v{true, true};
  for (Option o : shared_options(a, b)) {
    const Rational& ca = *a.conf_exp[idx(o)];
    const Rational& cb = *b.conf_exp[idx(o)];
    if (ca < cb) v.forward = false;
    if (cb < ca) v.backward = false;
  }
  return v;
}

OrderVerdict compare_reports(const Environment& env, const Experiment& a, const Experiment& b,
                             const MeasureReport& ra, const MeasureReport& rb, OrderingId which) {
  switch (which) {
    case OrderingId::LessRandom: return pointwise(ra.randomness.by_state, rb.randomness.by_state);
    case OrderingId::ExpectedLessRandom: return scalar(ra.randomness.expected, rb.randomness.expected);
    case OrderingId::ConfidenceDom: return confidence_verdict(ra, rb);
    case OrderingId::ExpectedConfidenceDom: return expected_confidence_verdict(ra, rb);
    case OrderingId::OverallConfidenceDom: return scalar(ra.conf_overall, rb.conf_overall);
    case OrderingId::ChoicePayoffDom: return scalar(ra.payoff.total, rb.payoff.total);
    case OrderingId::StateConditionalPayoffDom: return pointwise(ra.payoff.by_state, rb.payoff.by_state);
    case OrderingId::PsychPayoffDom: return scalar(ra.payoff.psych, rb.payoff.psych);
    case OrderingId::WtaOrder: return scalar(ra.wta, rb.wta);
    case OrderingId::LessAttenuated:
      return {less_attenuated(ra.attenuation, rb.attenuation, false),
              less_attenuated(rb.attenuation, ra.attenuation, false)};
    case OrderingId::BlackwellDom: return blackwell_dominates(env, a, b).verdict;
    case OrderingId::RocDom: return roc_dominates(roc(env, a), roc(env, b));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ordering");
}

}  // namespace

std::string_view ordering_name(OrderingId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<OrderingId> parse_ordering(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

bool less_attenuated(const std::vector<std::vector<Rational>>& da, const std::vector<std::vector<Rational>>& db,
                     bool strict) {
  for (std::size_t i = 0; i < db.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      const Rational& x = da[i][j];
      const Rational& y = db[i][j];
      if (y.sign() > 0 && (strict ? !(x > y) : x < y)) return false;
      if (y.sign() < 0 && (strict ? !(x < y) : x > y)) return false;
    }
  }
  return true;
}

OrderVerdict compare(const Environment& env, const Experiment& a, const Experiment& b, OrderingId which) {
  check_compatible(env, a);
  check_compatible(env, b);
  MeasureReport ra = measure(env, a);
  MeasureReport rb = measure(env, b);
  return compare_reports(env, a, b, ra, rb, which);
}

std::vector<std::pair<OrderingId, std::optional<OrderVerdict>>> full_matrix(const Environment& env,
                                                                           const Experiment& a,
                                                                           const Experiment& b) {
  check_compatible(env, a);
  check_compatible(env, b);
  MeasureReport ra = measure(env, a);
  MeasureReport rb = measure(env, b);
  std::vector<std::pair<OrderingId, std::optional<OrderVerdict>>> out;
  for (OrderingId id : kAllOrderings) {
    if (id == OrderingId::RocDom) {
      try {
        out.emplace_back(id, compare_reports(env, a, b, ra, rb, id));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TieStatesPresent && e.code() != ErrorCode::HypothesisMassNotHalf) throw;
        out.emplace_back(id, std::nullopt);
      }
      continue;
    }
    out.emplace_back(id, compare_reports(env, a, b, ra, rb, id));
  }
  return out;
}

}  // namespace bwo
