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

#include "bwo/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <thread>

#include "bwo/error.hpp"

namespace bwo::search {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng stream(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(splitmix64(seed) ^ index)); }

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  while (true) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

std::vector<long> composition(Rng& rng, long total, std::size_t parts) {
  if (parts == 0) throw Error(ErrorCode::InvalidArgument, "composition needs at least one part");
  std::vector<long> cuts{0, total};
  for (std::size_t i = 0; i + 1 < parts; ++i) {
    cuts.push_back(static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(total) + 1)));
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<long> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back(cuts[i + 1] - cuts[i]);
  return out;
}

Environment random_environment(Rng& rng, std::size_t states, const std::vector<Rational>& grid, long denominator) {
  if (states == 0) throw Error(ErrorCode::InvalidArgument, "need at least one state");
  if (grid.size() < 2) throw Error(ErrorCode::InvalidArgument, "utility grid needs two values");
  const std::size_t pairs = states / 2;
  const bool tie = states % 2 == 1;
  const std::size_t blocks = pairs + (tie ? 1 : 0);
  if (denominator < static_cast<long>(blocks)) throw Error(ErrorCode::InvalidArgument, "denominator too small");

  // Positive composition: one unit per block plus a free composition.
  std::vector<long> mass = composition(rng, denominator - static_cast<long>(blocks), blocks);
  for (auto& m : mass) m += 1;

  std::vector<State> out;
  for (std::size_t k = 0; k < pairs; ++k) {
    std::size_t i = uniform_below(rng, grid.size());
    std::size_t j = uniform_below(rng, grid.size() - 1);
    if (j >= i) ++j;
    Rational half_mass(mass[k], 2 * denominator);
    out.push_back({half_mass, grid[i], grid[j]});
    out.push_back({half_mass, grid[j], grid[i]});
  }
  if (tie) {
    const Rational& u = grid[uniform_below(rng, grid.size())];
    out.push_back({Rational(mass.back(), denominator), u, u});
  }
  return Environment(std::move(out));
}

Experiment random_experiment(Rng& rng, std::size_t states, std::size_t signals, long denominator) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t w = 0; w < states; ++w) {
    std::vector<Rational> row;
    for (long part : composition(rng, denominator, signals)) row.emplace_back(part, denominator);
    rows.push_back(std::move(row));
  }
  return Experiment(std::move(rows));
}

namespace {

constexpr std::array<std::pair<Requirement, std::string_view>, 8> kRequirementNames{{
    {Requirement::Forward, "forward"},
    {Requirement::Backward, "backward"},
    {Requirement::NotForward, "not-forward"},
    {Requirement::NotBackward, "not-backward"},
    {Requirement::Equal, "equal"},
    {Requirement::Incomparable, "incomparable"},
    {Requirement::StrictForward, "strict-forward"},
    {Requirement::StrictBackward, "strict-backward"},
}};

}  // namespace

std::string_view requirement_name(Requirement r) {
  for (const auto& [k, name] : kRequirementNames) {
    if (k == r) return name;
  }
  return "?";
}

std::optional<Requirement> parse_requirement(std::string_view name) {
  for (const auto& [k, n] : kRequirementNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool satisfies(const OrderVerdict& v, Requirement r) {
  switch (r) {
    case Requirement::Forward: return v.forward;
    case Requirement::Backward: return v.backward;
    case Requirement::NotForward: return !v.forward;
    case Requirement::NotBackward: return !v.backward;
    case Requirement::Equal: return v.equal();
    case Requirement::Incomparable: return v.incomparable();
    case Requirement::StrictForward: return v.strict_forward();
    case Requirement::StrictBackward: return v.strict_backward();
  }
  return false;
}

bool predicate_holds(const std::vector<Constraint>& predicate, const Environment& env, const Experiment& a,
                     const Experiment& b) {
  std::map<OrderingId, OrderVerdict> cache;
  for (const auto& c : predicate) {
    auto it = cache.find(c.order);
    if (it == cache.end()) {
      try {
        it = cache.emplace(c.order, compare(env, a, b, c.order)).first;
      } catch (const Error&) {
        return false;
      }
    }
    if (!satisfies(it->second, c.require)) return false;
  }
  return true;
}

std::vector<Witness> find(const SearchSpec& spec, const std::vector<Witness>& pool) {
  if (spec.n_samples == 0 && pool.empty()) throw Error(ErrorCode::InvalidArgument, "n_samples must be positive");
  std::vector<Witness> out;
  for (const auto& w : pool) {
    if (out.size() >= spec.max_witnesses) return out;
    if (predicate_holds(spec.predicate, w.env, w.a, w.b)) out.push_back(w);
  }

  std::vector<std::optional<Witness>> found(spec.n_samples);
  auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t i = worker; i < spec.n_samples; i += workers) {
      Rng rng = stream(spec.seed, i);
      Environment env = random_environment(rng, spec.state_count, spec.utility_grid, spec.denominator);
      Experiment a = random_experiment(rng, spec.state_count, spec.signal_count, spec.denominator);
      Experiment b = random_experiment(rng, spec.state_count, spec.signal_count, spec.denominator);
      if (predicate_holds(spec.predicate, env, a, b)) {
        found[i] = Witness{"sample:" + std::to_string(i), std::move(env), std::move(a), std::move(b)};
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.workers, spec.n_samples));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w, workers);
    for (auto& t : threads) t.join();
  }
  for (auto& f : found) {
    if (out.size() >= spec.max_witnesses) break;
    if (f) out.push_back(std::move(*f));
  }
  return out;
}

Environment binary_environment() {
  const Rational half(1, 2);
  return Environment({{half, Rational(1), Rational(0)}, {half, Rational(0), Rational(1)}});
}

Experiment binary_experiment(const Rational& theta, const Rational& gamma) {
  return Experiment({{theta, Rational(1) - theta}, {Rational(1) - gamma, gamma}});
}

RegionMap region_map(const Rational& theta, const Rational& gamma, const Rational& step, bool full_square) {
  for (const auto* v : {&theta, &gamma}) {
    if (v->sign() < 0 || *v > Rational(1)) throw Error(ErrorCode::InvalidArgument, "reference outside [0,1]");
  }
  RegionMap map{theta, gamma, step, full_square ? Rational(0) : Rational(1, 2), {}};
  if (step.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  Rational count = (Rational(1) - map.low) / step;
  if (count.raw().get_den() != 1) throw Error(ErrorCode::InvalidArgument, "step must divide the range");
  const long n = count.raw().get_num().get_si();

  Environment env = binary_environment();
  Experiment ref = binary_experiment(theta, gamma);
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      RegionCell cell;
      cell.theta = map.low + step * Rational(i);
      cell.gamma = map.low + step * Rational(j);
      Experiment e = binary_experiment(cell.theta, cell.gamma);
      for (std::size_t k = 0; k < kRegionOrderings.size(); ++k) {
        cell.verdicts[k] = compare(env, e, ref, kRegionOrderings[k]);
      }
      map.cells.push_back(std::move(cell));
    }
  }
  return map;
}

void write_region_csv(std::ostream& os, const RegionMap& map) {
  os << "theta,gamma,ordering,verdict\n";
  for (const auto& cell : map.cells) {
    for (std::size_t k = 0; k < kRegionOrderings.size(); ++k) {
      os << cell.theta << "," << cell.gamma << "," << ordering_name(kRegionOrderings[k]) << ","
         << cell.verdicts[k].label() << "\n";
    }
  }
}

}  // namespace bwo::search
