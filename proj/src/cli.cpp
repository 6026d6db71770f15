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

#include "bwo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bwo/corpus.hpp"
#include "bwo/coupling.hpp"
#include "bwo/document.hpp"
#include "bwo/error.hpp"
#include "bwo/families.hpp"
#include "bwo/infostats.hpp"
#include "bwo/measures.hpp"
#include "bwo/orders.hpp"
#include "bwo/search.hpp"
#include "bwo/shifts.hpp"

namespace bwo {

namespace {

using Json = nlohmann::ordered_json;

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  return f;
}

/// Writes to `path`, or to `fallback` when `path` is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream f = open_out(path);
  body(f);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_matrix(std::ostream& os, const std::vector<std::vector<Rational>>& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << "\n";
  }
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto i : v) out += (out.empty() ? "" : " ") + std::to_string(i);
  return out;
}

Document single(const Environment& env, const std::string& name, const Experiment& exp) {
  Document d;
  d.env = env;
  d.experiments.emplace_back(name, exp);
  return d;
}

// ─── Subcommand bodies ────────────────────────────────────────────────────

struct MeasureArgs {
  std::string env, exp, state_csv, pair_csv;
};

void run_measure(const MeasureArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  const Experiment& e = d.experiment_or_first(a.exp);
  MeasureReport r = measure(d.env, e);
  write_report(out, r);
  if (!a.state_csv.empty()) emit(a.state_csv, out, [&](std::ostream& os) { write_state_csv(os, d.env, r); });
  if (!a.pair_csv.empty()) emit(a.pair_csv, out, [&](std::ostream& os) { write_pair_csv(os, r); });
}

struct CompareArgs {
  std::string env, a, b, order, csv;
  bool all = false;
};

void run_compare(const CompareArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  const Experiment& ea = d.experiment(a.a);
  const Experiment& eb = d.experiment(a.b);
  std::vector<std::pair<std::string, std::string>> rows;
  if (!a.order.empty()) {
    auto id = parse_ordering(a.order);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown ordering '" + a.order + "'");
    rows.emplace_back(std::string(ordering_name(*id)), compare(d.env, ea, eb, *id).label());
  } else {
    for (const auto& [id, v] : full_matrix(d.env, ea, eb)) {
      rows.emplace_back(std::string(ordering_name(id)), v ? v->label() : std::string("n/a"));
    }
  }
  for (const auto& [name, label] : rows) out << std::left << std::setw(22) << name << label << "\n";
  if (!a.csv.empty()) {
    emit(a.csv, out, [&](std::ostream& os) {
      os << "ordering,verdict\n";
      for (const auto& [name, label] : rows) os << name << "," << label << "\n";
    });
  }
}

struct ShiftArgs {
  std::string env, exp, from, to, shifts, out_csv, name = "shifted";
};

std::vector<Shift> load_shifts(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_shifts_csv(in);
}

void run_shift_apply(const ShiftArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  Experiment result = replay(d.env, d.experiment_or_first(a.exp), load_shifts(a.shifts));
  out << dump_document(single(d.env, a.name, result));
}

int run_shift_decompose(const ShiftArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  Decomposition r = decompose(d.env, d.experiment(a.from), d.experiment(a.to));
  if (!r.decomposable) {
    out << "not decomposable";
    if (r.violating_state) out << " (state " << *r.violating_state << ")";
    out << ": " << r.reason << "\n";
    return kExitOk;
  }
  emit(a.out_csv, out, [&](std::ostream& os) { write_shifts_csv(os, r.shifts); });
  return kExitOk;
}

void run_shift_verify(const ShiftArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  SufficiencyReport r = verify_suff(d.env, d.experiment_or_first(a.exp), load_shifts(a.shifts));
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "payoff_dominates = " << yn(r.payoff) << "\n";
  out << "expected_confidence_dominates = " << yn(r.expected_confidence) << "\n";
  out << "less_random = " << (r.less_random ? yn(*r.less_random) : "n/a (start not indicative)") << "\n";
  out << "expected_less_random = " << yn(r.expected_less_random) << "\n";
}

struct RocArgs {
  std::string env, exp, csv;
};

void run_roc(const RocArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  RocCurve c = roc(d.env, d.experiment_or_first(a.exp));
  emit(a.csv, out, [&](std::ostream& os) {
    os << "fpr,tpr\n";
    for (const auto& p : c.vertices) os << p.fpr << "," << p.tpr << "\n";
  });
  if (!a.csv.empty()) out << c.vertices.size() << " vertices written to " << a.csv << "\n";
}

struct BlackwellArgs {
  std::string env, a, b;
};

void run_blackwell(const BlackwellArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  BlackwellVerdict v = blackwell_dominates(d.env, d.experiment(a.a), d.experiment(a.b));
  out << "verdict = " << v.verdict.label() << "\n";
  if (v.forward_kernel) {
    out << "kernel " << a.b << " = " << a.a << " K:\n";
    write_matrix(out, *v.forward_kernel);
  }
  if (v.backward_kernel) {
    out << "kernel " << a.a << " = " << a.b << " K:\n";
    write_matrix(out, *v.backward_kernel);
  }
}

struct CoupleArgs {
  std::string p1, p2, e1, e2, criterion = "aligned", csv;
};

void run_couple(const CoupleArgs& a, std::ostream& out) {
  auto crit = parse_criterion(a.criterion);
  if (!crit) throw Error(ErrorCode::InvalidArgument, "unknown criterion '" + a.criterion + "'");
  Document d1 = load_document(a.p1);
  Document d2 = load_document(a.p2);
  Problem p1(d1.env, d1.experiment_or_first(a.e1));
  Problem p2(d2.env, d2.experiment_or_first(a.e2));
  CouplingVerdict v = dominates(p1, p2, *crit);
  out << "verdict = " << v.verdict.label() << "\n";
  auto show_cut = [&](const char* what, const lp::HallCut& cut) {
    out << what << " infeasible: states {" << index_list(cut.sources) << "} of the dominated problem need "
        << cut.supply << " but their allowed partners {" << index_list(cut.sinks) << "} carry " << cut.demand << "\n";
  };
  if (v.forward_cut) show_cut("p1 over p2", *v.forward_cut);
  if (v.backward_cut) show_cut("p2 over p1", *v.backward_cut);
  if (*crit == PairCriterion::AlignedDominance) {
    out << "common coupling = " << (common_coupling_exists(p1, p2) ? "yes" : "no") << "\n";
  }
  const MassGrid* mu = v.forward_coupling ? &*v.forward_coupling : (v.backward_coupling ? &*v.backward_coupling : nullptr);
  if (mu) {
    out << "coupling (" << (v.forward_coupling ? "rows: p2 states, columns: p1 states" : "rows: p1 states, columns: p2 states")
        << "):\n";
    if (a.csv.empty()) {
      write_matrix(out, *mu);
    } else {
      emit(a.csv, out, [&](std::ostream& os) { write_matrix(os, *mu); });
    }
  }
}

struct FamilyArgs {
  std::string env, exp, name = "family", response = "logistic", beta;
  double lambda = 1.0, mu = 0.0, z0 = 1.0, z1 = 1.0, alpha = 1.0, du = 1.0, ux = 1.0, uy = 0.0, beta_bar = -1.0;
  unsigned t = 2;
  std::size_t budget = families::kDefaultRepeatBudget;
  std::vector<double> grid;
};

void run_luce(const FamilyArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  out << dump_document(single(d.env, a.name, families::luce(d.env, a.lambda)));
}

void run_repeat(const FamilyArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  out << dump_document(single(d.env, a.name, families::repeat(d.experiment_or_first(a.exp), a.t, a.budget)));
}

void run_gaussian(const FamilyArgs& a, std::ostream& out) {
  families::GaussianSetup g{a.mu, a.z0, a.z1, a.alpha};
  double p = families::gaussian_correct_prob(g, a.du);
  out << std::setprecision(17) << "correct_prob = " << p << "\n";
}

void run_fechner(const FamilyArgs& a, std::ostream& out) {
  families::FechnerSpec spec{families::ResponseFunction::by_name(a.response), a.lambda};
  auto issues = families::validate(spec);
  for (const auto& i : issues) out << "invalid: " << i << "\n";
  if (!issues.empty()) throw Error(ErrorCode::InvalidArgument, "response function fails validation");
  out << std::setprecision(17);
  out << "choose_x_prob = " << families::fechner_choose_prob(spec, a.ux, a.uy) << "\n";
  out << "cross_partial = " << families::fechner_cross_partial(spec, a.ux, a.uy, a.lambda) << "\n";
  if (!a.grid.empty()) {
    auto r = families::fechner_comovement_check(spec, a.ux, a.uy, a.grid);
    out << "comonotone = " << (r.comonotone ? "yes" : "no") << "\n";
    for (const auto& v : r.violations) out << "violation: " << v << "\n";
  }
}

std::vector<std::vector<double>> load_beta(const std::string& path, std::size_t n) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!j.is_array() || j.size() != n) throw Error(ErrorCode::ParseError, path + ": expected a square array");
  std::vector<std::vector<double>> beta(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw Error(ErrorCode::ParseError, path + ": expected a square array");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& v = j[i][k];
      if (v.is_string() && v.get<std::string>() == "inf") {
        beta[i][k] = std::numeric_limits<double>::infinity();
      } else if (v.is_number()) {
        beta[i][k] = v.get<double>();
      } else {
        throw Error(ErrorCode::ParseError, path + ": entries must be numbers or \"inf\"");
      }
    }
  }
  return beta;
}

void run_cmc(const FamilyArgs& a, std::ostream& out) {
  Document d = load_document(a.env);
  const std::size_t n = d.env.size();
  std::vector<std::vector<double>> beta;
  if (!a.beta.empty()) {
    beta = load_beta(a.beta, n);
  } else if (a.beta_bar >= 0) {
    beta.assign(n, std::vector<double>(n, a.beta_bar));
    for (std::size_t i = 0; i < n; ++i) beta[i][i] = 0;
  } else {
    throw Error(ErrorCode::InvalidArgument, "give --beta FILE or --beta-bar VALUE");
  }
  for (const auto& [name, e] : d.experiments) {
    if (!a.exp.empty() && name != a.exp) continue;
    double c = families::cmc_cost(d.env, e, beta);
    out << name << " = ";
    if (std::isinf(c)) {
      out << "inf\n";
    } else {
      out << std::setprecision(17) << c << "\n";
    }
  }
}

search::SearchSpec parse_search_spec(const std::string& path, bool& include_corpus) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  auto bad = [&](const std::string& why) { throw Error(ErrorCode::ParseError, path + ": " + why); };
  if (!j.is_object()) bad("expected an object");
  search::SearchSpec s;
  try {
    s.seed = j.value("seed", s.seed);
    s.n_samples = j.value("n_samples", s.n_samples);
    s.state_count = j.value("states", s.state_count);
    s.signal_count = j.value("signals", s.signal_count);
    s.denominator = j.value("denominator", s.denominator);
    s.workers = j.value("workers", s.workers);
    s.max_witnesses = j.value("max_witnesses", s.max_witnesses);
    include_corpus = j.value("include_corpus", false);
    if (j.contains("utility_grid")) {
      s.utility_grid.clear();
      for (const auto& v : j["utility_grid"]) {
        s.utility_grid.push_back(v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long>()));
      }
    }
    if (j.contains("predicate")) {
      for (const auto& c : j["predicate"]) {
        auto order = parse_ordering(c.at("order").get<std::string>());
        auto req = search::parse_requirement(c.at("require").get<std::string>());
        if (!order) bad("unknown ordering '" + c.at("order").get<std::string>() + "'");
        if (!req) bad("unknown requirement '" + c.at("require").get<std::string>() + "'");
        s.predicate.push_back({*order, *req});
      }
    }
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  return s;
}

struct SearchArgs {
  std::string spec, out;
  std::size_t workers = 0;
};

void run_search(const SearchArgs& a, std::ostream& out) {
  bool include_corpus = false;
  search::SearchSpec spec = parse_search_spec(a.spec, include_corpus);
  if (a.workers > 0) spec.workers = a.workers;
  std::vector<search::Witness> pool;
  if (include_corpus) pool = corpus_witnesses();
  auto found = search::find(spec, pool);
  std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::ostringstream name;
    name << "witness_" << std::setw(4) << std::setfill('0') << i << ".json";
    Document d;
    d.env = found[i].env;
    d.experiments = {{"a", found[i].a}, {"b", found[i].b}};
    std::ofstream f = open_out((std::filesystem::path(a.out) / name.str()).string());
    f << dump_document(d);
    out << name.str() << " " << found[i].source << "\n";
  }
  out << found.size() << " witnesses\n";
}

struct RegionArgs {
  std::string theta, gamma, step = "1/20", csv;
  bool full = false;
};

void run_region(const RegionArgs& a, std::ostream& out) {
  auto map = search::region_map(Rational::parse(a.theta), Rational::parse(a.gamma), Rational::parse(a.step), a.full);
  emit(a.csv, out, [&](std::ostream& os) { search::write_region_csv(os, map); });
  if (!a.csv.empty()) out << map.cells.size() << " cells written to " << a.csv << "\n";
}

struct CorpusArgs {
  std::string filter;
  bool verbose = false;
};

void run_corpus_cmd(const CorpusArgs& a, std::ostream& out) {
  CorpusReport r = run_corpus(a.filter);
  std::string current;
  for (const auto& res : r.results) {
    if (!a.verbose && res.outcome.pass) continue;
    out << (res.outcome.pass ? "ok   " : "FAIL ") << res.case_id << ": " << res.quantity << " expected "
        << res.outcome.expected << ", got " << res.outcome.observed << " [" << res.note << "]\n";
  }
  out << r.results.size() << " checks, " << r.failing_cases.size() << " failing cases\n";
  require_pass(r);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact choice, confidence and information orderings for binary decisions", "bwo"};
  app.require_subcommand(1);

  MeasureArgs measure_args;
  auto* measure_cmd = app.add_subcommand("measure", "All measures of one experiment");
  measure_cmd->add_option("--env", measure_args.env, "Document file")->required();
  measure_cmd->add_option("--exp", measure_args.exp, "Experiment name (default: first)");
  measure_cmd->add_option("--state-csv", measure_args.state_csv, "Per-state CSV output");
  measure_cmd->add_option("--pair-csv", measure_args.pair_csv, "Per-state-pair CSV output");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two experiments");
  compare_cmd->add_option("--env", compare_args.env, "Document file")->required();
  compare_cmd->add_option("--a", compare_args.a, "First experiment")->required();
  compare_cmd->add_option("--b", compare_args.b, "Second experiment")->required();
  auto* order_opt = compare_cmd->add_option("--order", compare_args.order, "One ordering");
  compare_cmd->add_flag("--all", compare_args.all, "Every ordering (default)")->excludes(order_opt);
  compare_cmd->add_option("--csv", compare_args.csv, "CSV output");

  ShiftArgs shift_args;
  auto* shift_cmd = app.add_subcommand("shift", "Aligned and neutral shifts");
  shift_cmd->require_subcommand(1);
  auto* apply_cmd = shift_cmd->add_subcommand("apply", "Apply a shift sequence");
  apply_cmd->add_option("--env", shift_args.env, "Document file")->required();
  apply_cmd->add_option("--exp", shift_args.exp, "Experiment name (default: first)");
  apply_cmd->add_option("--shifts", shift_args.shifts, "Shift CSV")->required();
  apply_cmd->add_option("--name", shift_args.name, "Name of the result");
  auto* decompose_cmd = shift_cmd->add_subcommand("decompose", "Shift sequence from one experiment to another");
  decompose_cmd->add_option("--env", shift_args.env, "Document file")->required();
  decompose_cmd->add_option("--from", shift_args.from, "Start experiment")->required();
  decompose_cmd->add_option("--to", shift_args.to, "Target experiment")->required();
  decompose_cmd->add_option("--out", shift_args.out_csv, "Shift CSV output");
  auto* verify_cmd = shift_cmd->add_subcommand("verify", "Check what a shift sequence improves");
  verify_cmd->add_option("--env", shift_args.env, "Document file")->required();
  verify_cmd->add_option("--exp", shift_args.exp, "Experiment name (default: first)");
  verify_cmd->add_option("--shifts", shift_args.shifts, "Shift CSV")->required();

  RocArgs roc_args;
  auto* roc_cmd = app.add_subcommand("roc", "ROC breakpoints for the hypothesis that x is correct");
  roc_cmd->add_option("--env", roc_args.env, "Document file")->required();
  roc_cmd->add_option("--exp", roc_args.exp, "Experiment name (default: first)");
  roc_cmd->add_option("--csv", roc_args.csv, "CSV output");

  BlackwellArgs bw_args;
  auto* bw_cmd = app.add_subcommand("blackwell", "Blackwell comparison with garbling kernels");
  bw_cmd->add_option("--env", bw_args.env, "Document file")->required();
  bw_cmd->add_option("--a", bw_args.a, "First experiment")->required();
  bw_cmd->add_option("--b", bw_args.b, "Second experiment")->required();

  CoupleArgs couple_args;
  auto* couple_cmd = app.add_subcommand("couple", "Cross-problem comparison through a coupling");
  couple_cmd->add_option("--p1", couple_args.p1, "First problem document")->required();
  couple_cmd->add_option("--p2", couple_args.p2, "Second problem document")->required();
  couple_cmd->add_option("--e1", couple_args.e1, "Experiment in the first document");
  couple_cmd->add_option("--e2", couple_args.e2, "Experiment in the second document");
  couple_cmd->add_option("--criterion", couple_args.criterion, "aligned, coupled-less-random or informational");
  couple_cmd->add_option("--csv", couple_args.csv, "Coupling CSV output");

  FamilyArgs fam;
  auto* family_cmd = app.add_subcommand("family", "Parametric experiment families");
  family_cmd->require_subcommand(1);
  auto* luce_cmd = family_cmd->add_subcommand("luce", "Logit experiment with noise lambda");
  luce_cmd->add_option("--env", fam.env, "Document file")->required();
  luce_cmd->add_option("--lambda", fam.lambda, "Noise parameter")->required();
  luce_cmd->add_option("--name", fam.name, "Name of the result");
  auto* repeat_cmd = family_cmd->add_subcommand("repeat", "t independent draws of an experiment");
  repeat_cmd->add_option("--env", fam.env, "Document file")->required();
  repeat_cmd->add_option("--exp", fam.exp, "Experiment name (default: first)");
  repeat_cmd->add_option("--t", fam.t, "Number of draws")->required();
  repeat_cmd->add_option("--budget", fam.budget, "Maximum signal count");
  repeat_cmd->add_option("--name", fam.name, "Name of the result");
  auto* gauss_cmd = family_cmd->add_subcommand("gaussian", "Probability of the correct choice with Gaussian noise");
  gauss_cmd->add_option("--mu", fam.mu, "Prior mean");
  gauss_cmd->add_option("--z0", fam.z0, "Prior variance");
  gauss_cmd->add_option("--z1", fam.z1, "Signal noise variance");
  gauss_cmd->add_option("--alpha", fam.alpha, "Noise scale");
  gauss_cmd->add_option("--du", fam.du, "Utility difference")->required();
  auto* fechner_cmd = family_cmd->add_subcommand("fechner", "Fechnerian choice probabilities");
  fechner_cmd->add_option("--f", fam.response, "logistic, probit or clamp");
  fechner_cmd->add_option("--lambda", fam.lambda, "Noise parameter");
  fechner_cmd->add_option("--ux", fam.ux, "Utility of x")->required();
  fechner_cmd->add_option("--uy", fam.uy, "Utility of y")->required();
  fechner_cmd->add_option("--grid", fam.grid, "Lambda grid for the comovement check");
  auto* cmc_cmd = family_cmd->add_subcommand("cmc", "Constant-marginal-cost information cost");
  cmc_cmd->add_option("--env", fam.env, "Document file")->required();
  cmc_cmd->add_option("--exp", fam.exp, "Experiment name (default: all)");
  auto* beta_opt = cmc_cmd->add_option("--beta", fam.beta, "JSON matrix of pair weights (\"inf\" allowed)");
  cmc_cmd->add_option("--beta-bar", fam.beta_bar, "Same weight for every pair of distinct states")->excludes(beta_opt);

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Random search for experiment pairs satisfying a predicate");
  search_cmd->add_option("--spec", search_args.spec, "Search spec JSON")->required();
  search_cmd->add_option("--out", search_args.out, "Witness directory")->required();
  search_cmd->add_option("--workers", search_args.workers, "Worker threads (overrides the spec)");

  RegionArgs region_args;
  auto* region_cmd = app.add_subcommand("region-map", "Verdicts over the binary (theta, gamma) square");
  region_cmd->add_option("--theta", region_args.theta, "Reference theta")->required();
  region_cmd->add_option("--gamma", region_args.gamma, "Reference gamma")->required();
  region_cmd->add_option("--step", region_args.step, "Grid step");
  region_cmd->add_flag("--full", region_args.full, "Cover [0,1]^2 instead of [1/2,1]^2");
  region_cmd->add_option("--csv", region_args.csv, "CSV output");

  CorpusArgs corpus_args;
  auto* corpus_cmd = app.add_subcommand("corpus", "Recompute the embedded worked examples");
  corpus_cmd->add_option("--filter", corpus_args.filter, "Comma-separated case ids");
  corpus_cmd->add_flag("--verbose,-v", corpus_args.verbose, "Show passing checks too");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (measure_cmd->parsed()) run_measure(measure_args, out);
    if (compare_cmd->parsed()) run_compare(compare_args, out);
    if (apply_cmd->parsed()) run_shift_apply(shift_args, out);
    if (decompose_cmd->parsed()) run_shift_decompose(shift_args, out);
    if (verify_cmd->parsed()) run_shift_verify(shift_args, out);
    if (roc_cmd->parsed()) run_roc(roc_args, out);
    if (bw_cmd->parsed()) run_blackwell(bw_args, out);
    if (couple_cmd->parsed()) run_couple(couple_args, out);
    if (luce_cmd->parsed()) run_luce(fam, out);
    if (repeat_cmd->parsed()) run_repeat(fam, out);
    if (gauss_cmd->parsed()) run_gaussian(fam, out);
    if (fechner_cmd->parsed()) run_fechner(fam, out);
    if (cmc_cmd->parsed()) run_cmc(fam, out);
    if (search_cmd->parsed()) run_search(search_args, out);
    if (region_cmd->parsed()) run_region(region_args, out);
    if (corpus_cmd->parsed()) run_corpus_cmd(corpus_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace bwo
