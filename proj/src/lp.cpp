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

#include "bwo/lp.hpp"

#include <deque>
#include <limits>
#include <optional>

#include "bwo/error.hpp"

namespace bwo::lp {

FeasibilityResult feasible(const FeasibilityProblem& p) {
  const std::size_t m = p.a.size();
  if (p.b.size() != m) throw Error(ErrorCode::DimensionMismatch, "rhs length differs from row count");
  const std::size_t n = m == 0 ? 0 : p.a.front().size();
  for (const auto& row : p.a) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "ragged constraint matrix");
  }

  FeasibilityResult result;
  if (m == 0) {
    result.feasible = true;
    result.x.assign(n, Rational(0));
    return result;
  }

  // Tableau over [original | artificial | rhs] with rows scaled so rhs >= 0.
  const std::size_t cols = n + m;
  std::vector<int> row_sign(m, 1);
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    row_sign[i] = p.b[i].sign() < 0 ? -1 : 1;
    Rational s(row_sign[i]);
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * p.a[i][j];
    t[i][n + i] = Rational(1);
    t[i][cols] = s * p.b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs for minimizing the sum of artificials.
  std::vector<Rational> reduced(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= n && j < cols) continue;
    Rational s;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    reduced[j] = -s;
  }

  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    const std::size_t e = *enter;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][e].sign() <= 0) continue;
      Rational ratio = t[i][cols] / t[i][e];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase-1 objective is bounded below by 0, so a leaving row exists.
    const std::size_t r = *leave;

    Rational pivot = t[r][e];
    for (auto& v : t[r]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][e].is_zero()) continue;
      Rational f = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (!t[r][j].is_zero()) t[i][j] -= f * t[r][j];
      }
    }
    if (!reduced[e].is_zero()) {
      Rational f = reduced[e];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (!t[r][j].is_zero()) reduced[j] -= f * t[r][j];
      }
    }
    basis[r] = e;
  }

  // reduced[cols] holds minus the objective value.
  Rational objective = -reduced[cols];
  if (objective.is_zero()) {
    result.feasible = true;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.x[basis[i]] = t[i][cols];
    }
    for (std::size_t i = 0; i < m; ++i) {
      Rational lhs;
      for (std::size_t j = 0; j < n; ++j) lhs += p.a[i][j] * result.x[j];
      if (lhs != p.b[i]) throw Error(ErrorCode::InvalidArgument, "simplex produced a non-solution");
    }
    return result;
  }

  // Artificial column n+i has cost 1 and reduced cost 1 - y_i.
  result.certificate.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = Rational(1) - reduced[n + i];
    result.certificate[i] = -y * Rational(row_sign[i]);
  }
  Rational yb;
  for (std::size_t i = 0; i < m; ++i) yb += result.certificate[i] * p.b[i];
  bool ok = yb.sign() < 0;
  for (std::size_t j = 0; j < n && ok; ++j) {
    Rational ya;
    for (std::size_t i = 0; i < m; ++i) ya += result.certificate[i] * p.a[i][j];
    ok = ya.sign() >= 0;
  }
  if (!ok) throw Error(ErrorCode::InvalidArgument, "simplex produced an invalid certificate");
  return result;
}

namespace {

struct Arc {
  std::size_t to;
  std::size_t rev;
  Rational cap;
  Rational flow;
};

class Graph {
 public:
  explicit Graph(std::size_t nodes) : adj_(nodes) {}

  std::size_t add(std::size_t from, std::size_t to, const Rational& cap) {
    adj_[from].push_back({to, adj_[to].size(), cap, Rational(0)});
    adj_[to].push_back({from, adj_[from].size() - 1, Rational(0), Rational(0)});
    return adj_[from].size() - 1;
  }

  Rational residual(std::size_t node, std::size_t k) const { return adj_[node][k].cap - adj_[node][k].flow; }

  Rational max_flow(std::size_t s, std::size_t t) {
    Rational total;
    while (true) {
      std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(adj_.size());
      std::vector<bool> seen(adj_.size(), false);
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const Arc& a = adj_[u][k];
          if (seen[a.to] || residual(u, k).sign() <= 0) continue;
          seen[a.to] = true;
          parent[a.to] = {u, k};
          queue.push_back(a.to);
        }
      }
      if (!seen[t]) return total;
      std::optional<Rational> push;
      for (std::size_t v = t; v != s; v = parent[v]->first) {
        auto [u, k] = *parent[v];
        Rational r = residual(u, k);
        if (!push || r < *push) push = r;
      }
      for (std::size_t v = t; v != s; v = parent[v]->first) {
        auto [u, k] = *parent[v];
        Arc& a = adj_[u][k];
        a.flow += *push;
        adj_[a.to][a.rev].flow -= *push;
      }
      total += *push;
    }
  }

  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < adj_[u].size(); ++k) {
        if (seen[adj_[u][k].to] || residual(u, k).sign() <= 0) continue;
        seen[adj_[u][k].to] = true;
        queue.push_back(adj_[u][k].to);
      }
    }
    return seen;
  }

  const Arc& arc(std::size_t node, std::size_t k) const { return adj_[node][k]; }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

TransportResult transport_feasible(const FlowNetwork& net) {
  const std::size_t ns = net.supply.size();
  const std::size_t nt = net.demand.size();
  if (net.allowed.size() != ns) throw Error(ErrorCode::DimensionMismatch, "allowed grid row count");
  for (const auto& row : net.allowed) {
    if (row.size() != nt) throw Error(ErrorCode::DimensionMismatch, "allowed grid column count");
  }
  Rational total_supply, total_demand;
  for (const auto& v : net.supply) {
    if (v.sign() < 0) throw Error(ErrorCode::InvalidArgument, "negative supply");
    total_supply += v;
  }
  for (const auto& v : net.demand) {
    if (v.sign() < 0) throw Error(ErrorCode::InvalidArgument, "negative demand");
    total_demand += v;
  }
  if (total_supply != total_demand) {
    throw Error(ErrorCode::InvalidArgument,
                "supply total " + total_supply.str() + " differs from demand total " + total_demand.str());
  }

  // Node layout: source, supplies, demands, sink.
  const std::size_t source = 0;
  const std::size_t sink = ns + nt + 1;
  Graph g(ns + nt + 2);
  const Rational unbounded = total_supply + Rational(1);
  std::vector<std::vector<std::optional<std::size_t>>> middle(ns, std::vector<std::optional<std::size_t>>(nt));
  for (std::size_t i = 0; i < ns; ++i) g.add(source, 1 + i, net.supply[i]);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      if (net.allowed[i][j]) middle[i][j] = g.add(1 + i, 1 + ns + j, unbounded);
    }
  }
  for (std::size_t j = 0; j < nt; ++j) g.add(1 + ns + j, sink, net.demand[j]);

  Rational value = g.max_flow(source, sink);
  TransportResult result;
  if (value == total_supply) {
    result.feasible = true;
    result.flow.assign(ns, std::vector<Rational>(nt));
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        if (middle[i][j]) result.flow[i][j] = g.arc(1 + i, *middle[i][j]).flow;
      }
    }
    return result;
  }

  auto seen = g.reachable(source);
  HallCut& cut = result.cut;
  std::vector<bool> neighbor(nt, false);
  for (std::size_t i = 0; i < ns; ++i) {
    if (!seen[1 + i]) continue;
    cut.sources.push_back(i);
    cut.supply += net.supply[i];
    for (std::size_t j = 0; j < nt; ++j) {
      if (net.allowed[i][j]) neighbor[j] = true;
    }
  }
  for (std::size_t j = 0; j < nt; ++j) {
    if (!neighbor[j]) continue;
    cut.sinks.push_back(j);
    cut.demand += net.demand[j];
  }
  return result;
}

}  // namespace bwo::lp
