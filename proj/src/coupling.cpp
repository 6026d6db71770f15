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

#include "bwo/coupling.hpp"

#include <algorithm>

#include "bwo/error.hpp"
#include "bwo/measures.hpp"

namespace bwo {

namespace {

struct ProblemStats {
  ChoiceProfile profile;
  std::vector<std::optional<Rational>> evidence;  // pi(x weakly optimal | s)
};

ProblemStats stats(const Problem& p) {
  ProblemStats st;
  st.profile = induce(p.env(), p.exp());
  for (const auto& c : signal_correctness(p.env(), p.exp())) {
    st.evidence.push_back(c ? std::optional<Rational>(c->x) : std::nullopt);
  }
  return st;
}

Rational correct_mass(const Problem& p, const ProblemStats& st, std::size_t w) {
  Option k = p.env().tag(w) == StateTag::XBetter ? Option::X : Option::Y;
  return st.profile.rho_cond[w][k];
}

// Pr(e >= t | w) when upper_tail, else Pr(e <= t | w).
Rational tail(const Problem& p, const ProblemStats& st, std::size_t w, const Rational& t, bool upper_tail) {
  Rational m;
  for (std::size_t s = 0; s < p.exp().signal_count(); ++s) {
    if (!st.evidence[s]) continue;
    bool hit = upper_tail ? *st.evidence[s] >= t : *st.evidence[s] <= t;
    if (hit) m += p.exp().at(w, s);
  }
  return m;
}

lp::TransportResult solve(const Problem& lower, const Problem& upper, const Grid& allowed) {
  lp::FlowNetwork net;
  for (const auto& st : lower.env().states()) net.supply.push_back(st.prior);
  for (const auto& st : upper.env().states()) net.demand.push_back(st.prior);
  net.allowed = allowed;
  return lp::transport_feasible(net);
}

}  // namespace

Problem::Problem(Environment env, Experiment exp) : env_(std::move(env)), exp_(std::move(exp)) {
  check_compatible(env_, exp_);
  if (env_.has_supported_tie_states()) {
    throw Error(ErrorCode::TieStatePresent, "problem has a positive-prior tie state");
  }
  auto classes = classify_signals(env_, exp_);
  for (std::size_t s = 0; s < classes.size(); ++s) {
    if (classes[s] == SignalClass::Tie) {
      throw Error(ErrorCode::TieSignalPresent, "signal " + std::to_string(s) + " is a tie");
    }
  }
}

std::string_view criterion_name(PairCriterion c) {
  switch (c) {
    case PairCriterion::AlignedDominance: return "aligned";
    case PairCriterion::CoupledLessRandom: return "coupled-less-random";
    case PairCriterion::InformationalAlignedDominance: return "informational";
  }
  return "?";
}

std::optional<PairCriterion> parse_criterion(std::string_view name) {
  for (auto c : {PairCriterion::AlignedDominance, PairCriterion::CoupledLessRandom,
                 PairCriterion::InformationalAlignedDominance}) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

Grid allowed_pairs(const Problem& lower, const Problem& upper, PairCriterion crit) {
  ProblemStats sl = stats(lower);
  ProblemStats su = stats(upper);
  std::vector<Rational> thresholds;
  if (crit == PairCriterion::InformationalAlignedDominance) {
    for (const auto* st : {&sl, &su}) {
      for (const auto& e : st->evidence) {
        if (e) thresholds.push_back(*e);
      }
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  }

  const std::size_t n1 = lower.env().size();
  const std::size_t n2 = upper.env().size();
  Grid g(n1, std::vector<bool>(n2, false));
  for (std::size_t i = 0; i < n1; ++i) {
    StateTag ti = lower.env().tag(i);
    if (ti == StateTag::Tie) continue;
    for (std::size_t j = 0; j < n2; ++j) {
      if (upper.env().tag(j) != ti) continue;
      bool ok = false;
      switch (crit) {
        case PairCriterion::AlignedDominance:
          ok = correct_mass(upper, su, j) >= correct_mass(lower, sl, i);
          break;
        case PairCriterion::CoupledLessRandom:
          ok = su.profile.rho_cond[j].max() >= sl.profile.rho_cond[i].max();
          break;
        case PairCriterion::InformationalAlignedDominance: {
          bool upper_tail = ti == StateTag::XBetter;
          ok = std::all_of(thresholds.begin(), thresholds.end(), [&](const Rational& t) {
            return tail(upper, su, j, t, upper_tail) >= tail(lower, sl, i, t, upper_tail);
          });
          break;
        }
      }
      g[i][j] = ok;
    }
  }
  return g;
}

CouplingVerdict dominates(const Problem& a, const Problem& b, PairCriterion crit) {
  CouplingVerdict v;
  auto fwd = solve(b, a, allowed_pairs(b, a, crit));
  auto bwd = solve(a, b, allowed_pairs(a, b, crit));
  v.verdict = {fwd.feasible, bwd.feasible};
  if (fwd.feasible) {
    v.forward_coupling = fwd.flow;
  } else {
    v.forward_cut = fwd.cut;
  }
  if (bwd.feasible) {
    v.backward_coupling = bwd.flow;
  } else {
    v.backward_cut = bwd.cut;
  }
  return v;
}

OrderVerdict robust_dominates(const Problem& a, const Problem& b) {
  OrderVerdict al = dominates(a, b, PairCriterion::AlignedDominance).verdict;
  OrderVerdict inf = dominates(a, b, PairCriterion::InformationalAlignedDominance).verdict;
  return {al.forward && inf.forward, al.backward && inf.backward};
}

bool common_coupling_exists(const Problem& a, const Problem& b) {
  Grid g1 = allowed_pairs(b, a, PairCriterion::AlignedDominance);
  Grid g2 = allowed_pairs(b, a, PairCriterion::CoupledLessRandom);
  for (std::size_t i = 0; i < g1.size(); ++i) {
    for (std::size_t j = 0; j < g1[i].size(); ++j) g1[i][j] = g1[i][j] && g2[i][j];
  }
  return solve(b, a, g1).feasible;
}

bool is_valid_coupling(const Problem& lower, const Problem& upper, const Grid& allowed, const MassGrid& mu) {
  const std::size_t n1 = lower.env().size();
  const std::size_t n2 = upper.env().size();
  if (mu.size() != n1) return false;
  std::vector<Rational> cols(n2);
  for (std::size_t i = 0; i < n1; ++i) {
    if (mu[i].size() != n2) return false;
    Rational row;
    for (std::size_t j = 0; j < n2; ++j) {
      if (mu[i][j].sign() < 0) return false;
      if (mu[i][j].sign() > 0 && !allowed[i][j]) return false;
      row += mu[i][j];
      cols[j] += mu[i][j];
    }
    if (row != lower.env().prior(i)) return false;
  }
  for (std::size_t j = 0; j < n2; ++j) {
    if (cols[j] != upper.env().prior(j)) return false;
  }
  return true;
}

}  // namespace bwo
