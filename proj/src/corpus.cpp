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

#include "bwo/corpus.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "bwo/coupling.hpp"
#include "bwo/error.hpp"
#include "bwo/families.hpp"
#include "bwo/infostats.hpp"
#include "bwo/measures.hpp"
#include "bwo/orders.hpp"
#include "bwo/shifts.hpp"

namespace bwo {

namespace {

using RationalFn = std::function<Rational(const Document&)>;
using TextFn = std::function<std::string(const Document&)>;

CorpusCheck exact(std::string quantity, std::string note, Rational expected, RationalFn f) {
  return {std::move(quantity), std::move(note), [expected, f](const Document& d) {
            Rational v = f(d);
            return CheckOutcome{expected.str(), v.str(), v == expected};
          }};
}

CorpusCheck printed(std::string quantity, std::string note, std::string shown, RationalFn f) {
  return {std::move(quantity), std::move(note), [shown, f](const Document& d) {
            Rational v = f(d);
            return CheckOutcome{shown, v.str() + " (" + v.decimal(6) + ")", printed_match(v, shown)};
          }};
}

CorpusCheck text(std::string quantity, std::string note, std::string expected, TextFn f) {
  return {std::move(quantity), std::move(note), [expected, f](const Document& d) {
            std::string v = f(d);
            return CheckOutcome{expected, v, v == expected};
          }};
}

CorpusCheck flag(std::string quantity, std::string note, bool expected, std::function<bool(const Document&)> f) {
  return text(std::move(quantity), std::move(note), expected ? "true" : "false",
              [f](const Document& d) { return std::string(f(d) ? "true" : "false"); });
}

CorpusCheck verdict(std::string note, std::string a, std::string b, OrderingId id, std::string expected) {
  std::string quantity = std::string(ordering_name(id)) + "(" + a + "," + b + ")";
  return text(std::move(quantity), std::move(note), std::move(expected), [a, b, id](const Document& d) {
    return std::string(compare(d.env, d.experiment(a), d.experiment(b), id).label());
  });
}

Rational value_of(const MaybeRational& v) {
  if (!v) throw Error(ErrorCode::InvalidArgument, "value undefined");
  return *v;
}

Rational conf_cond(const Document& d, const std::string& e, Option o, std::size_t state) {
  return value_of(confidence_cond(d.env, d.experiment(e))[idx(o)][state]);
}

Rational conf_exp(const Document& d, const std::string& e, Option o) {
  return value_of(confidence_exp(d.env, d.experiment(e))[idx(o)]);
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& r : v) out += (out.empty() ? "" : " ") + r.str();
  return out;
}

std::string roc_text(const RocCurve& c) {
  std::string out;
  for (const auto& p : c.vertices) out += (out.empty() ? "" : " ") + ("(" + p.fpr.str() + "," + p.tpr.str() + ")");
  return out;
}

std::string shifts_text(const std::vector<Shift>& shifts) {
  std::ostringstream os;
  write_shifts_csv(os, shifts);
  std::string s = os.str();
  s = s.substr(s.find('\n') + 1);
  for (auto& c : s) {
    if (c == '\n') c = ';';
  }
  if (!s.empty()) s.pop_back();
  return s;
}

const char* kBinaryStates = R"("states": [{"prior": "1/2", "u": ["1", "0"]}, {"prior": "1/2", "u": ["0", "1"]}])";

std::vector<CorpusCase> build() {
  std::vector<CorpusCase> cases;
  const Option X = Option::X;
  const Option Y = Option::Y;

  // Binary environment with the parametric (theta, gamma) family.
  cases.push_back(
      {"table1-probes",
       std::string("{") + kBinaryStates + R"(, "experiments": {
         "t1": [["0.9", "0.1"], ["0.8", "0.2"]],
         "revealing": [["1", "0"], ["0", "1"]],
         "uninformative": [["1/2", "1/2"], ["1/2", "1/2"]],
         "s67": [["0.6", "0.4"], ["0.3", "0.7"]],
         "s77": [["0.7", "0.3"], ["0.3", "0.7"]],
         "s68": [["0.6", "0.4"], ["0.2", "0.8"]]}})",
       {
           exact("advantage(t1,s1)", "derived: (0.9-0.8)/2", Rational(1, 20),
                 [](const Document& d) { return advantage(d.env, d.experiment("t1"), 0); }),
           exact("posterior(t1,s1)[w1]", "derived: 0.9/1.7", Rational(9, 17),
                 [](const Document& d) { return posterior(d.env, d.experiment("t1"), 0)[0]; }),
           text("randomness(t1)", "derived: max(theta,1-theta), max(gamma,1-gamma)", "9/10 4/5",
                [](const Document& d) { return join(randomness(induce(d.env, d.experiment("t1"))).by_state); }),
           printed("psi(x|w1) t1", "example: t=1 confidence", "0.529",
                   [X](const Document& d) { return conf_cond(d, "t1", X, 0); }),
           printed("psi(y|w2) t1", "example: t=1 confidence", "0.66",
                   [Y](const Document& d) { return conf_cond(d, "t1", Y, 1); }),
           exact("overall confidence(t1)", "derived: (theta+gamma)/2", Rational(11, 20),
                 [](const Document& d) { return confidence_overall(d.env, d.experiment("t1")); }),
           exact("W_psych(t1)", "derived: equals overall confidence", Rational(11, 20),
                 [](const Document& d) { return payoffs(d.env, d.experiment("t1")).psych; }),
           text("roc(t1)", "derived: (1-gamma, theta)", "(0,0) (4/5,9/10) (1,1)",
                [](const Document& d) { return roc_text(roc(d.env, d.experiment("t1"))); }),
           verdict("example: (1,1) and (0.5,0.5) share a randomness locus", "revealing", "uninformative",
                   OrderingId::ExpectedLessRandom, "Equal"),
           flag("indicative(t1)", "derived: gamma < 1/2", false,
                [](const Document& d) { return is_indicative(d.env, d.experiment("t1")).indicative; }),
           text("decompose(s67,s77)", "derived: one aligned shift in w1", "aligned,0,1,0,1/10",
                [](const Document& d) {
                  auto r = decompose(d.env, d.experiment("s67"), d.experiment("s77"));
                  return r.decomposable ? shifts_text(r.shifts) : "not decomposable";
                }),
           text("decompose(s77,s68)", "derived: correct mass falls in w1", "violating state 0",
                [](const Document& d) {
                  auto r = decompose(d.env, d.experiment("s77"), d.experiment("s68"));
                  return r.decomposable ? std::string("decomposable")
                                        : "violating state " + std::to_string(r.violating_state.value_or(99));
                }),
           text("verify_suff(s67 -> s77)", "derived: payoff and confidence rise, expected randomness does not",
                "payoff=1 confidence=1 less_random=1 expected_less_random=0", [](const Document& d) {
                  auto shifts = decompose(d.env, d.experiment("s67"), d.experiment("s77")).shifts;
                  auto r = verify_suff(d.env, d.experiment("s67"), shifts);
                  return "payoff=" + std::to_string(r.payoff) + " confidence=" +
                         std::to_string(r.expected_confidence) +
                         " less_random=" + (r.less_random ? std::to_string(*r.less_random) : "-") +
                         " expected_less_random=" + std::to_string(r.expected_less_random);
                }),
       }});

  cases.push_back(
      {"repeat-t2",
       std::string("{") + kBinaryStates + R"(, "experiments": {"t1": [["0.9", "0.1"], ["0.8", "0.2"]]}})",
       {
           printed("psi(x) t=2", "example: t=2 confidence", "0.558",
                   [](const Document& d) {
                     return value_of(confidence_exp(d.env, families::repeat(d.experiment("t1"), 2))[0]);
                   }),
           printed("posterior after (s1,s2)", "example: t=2 confidence", "0.64",
                   [](const Document& d) { return posterior(d.env, families::repeat(d.experiment("t1"), 2), 1)[1]; }),
           printed("posterior after (s2,s2)", "example: t=2 confidence", "0.8",
                   [](const Document& d) { return posterior(d.env, families::repeat(d.experiment("t1"), 2), 3)[1]; }),
           printed("psi(y|w1) t=2", "example: t=2 confidence", "0.648",
                   [](const Document& d) {
                     return value_of(confidence_cond(d.env, families::repeat(d.experiment("t1"), 2))[1][0]);
                   }),
           printed("psi(y|w2) t=2", "example: t=2 confidence", "0.657",
                   [](const Document& d) {
                     return value_of(confidence_cond(d.env, families::repeat(d.experiment("t1"), 2))[1][1]);
                   }),
           text("classes t=2", "derived: only (s1,s1) favours x", "x y y y",
                [](const Document& d) {
                  std::string out;
                  for (auto c : classify_signals(d.env, families::repeat(d.experiment("t1"), 2))) {
                    out += (out.empty() ? "" : " ") + std::string(signal_class_name(c));
                  }
                  return out;
                }),
           flag("W(t=2) >= W(t=1)", "derived: repeated experiment Blackwell-dominates", true,
                [](const Document& d) {
                  return payoffs(d.env, families::repeat(d.experiment("t1"), 2)).total >=
                         payoffs(d.env, d.experiment("t1")).total;
                }),
       }});

  cases.push_back(
      {"example1-table2",
       R"({"states": [
            {"prior": "0.005", "u": ["1000", "1"]}, {"prior": "0.005", "u": ["1000", "0"]},
            {"prior": "0.005", "u": ["1", "1000"]}, {"prior": "0.49", "u": ["1", "0"]},
            {"prior": "0.005", "u": ["0", "1000"]}, {"prior": "0.49", "u": ["0", "1"]}],
          "experiments": {
            "sigma": [["1", "0", "0"], ["1", "0", "0"], ["1", "0", "0"], ["1", "0", "0"], ["0", "1", "0"], ["1", "0", "0"]],
            "sigma_p": [["1", "0", "0"], ["1/2", "0", "1/2"], ["0", "0", "1"], ["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]]}})",
       {
           verdict("example: sigma less random", "sigma", "sigma_p", OrderingId::LessRandom, "StrictForward"),
           verdict("example: sigma more confident", "sigma", "sigma_p", OrderingId::ConfidenceDom, "StrictForward"),
           verdict("example: sigma' pays more", "sigma_p", "sigma", OrderingId::ChoicePayoffDom, "StrictForward"),
           verdict("derived: sigma is a garbling of sigma'", "sigma_p", "sigma", OrderingId::BlackwellDom,
                   "StrictForward"),
           text("classes(sigma')", "derived: advantages 7.005, -5, -2.005", "x y y",
                [](const Document& d) {
                  std::string out;
                  for (auto c : classify_signals(d.env, d.experiment("sigma_p"))) {
                    out += (out.empty() ? "" : " ") + std::string(signal_class_name(c));
                  }
                  return out;
                }),
       }});

  cases.push_back(
      {"example2",
       R"({"states": [
            {"prior": "0.49", "u": ["1", "0"]}, {"prior": "0.01", "u": ["1", "100"]},
            {"prior": "0.49", "u": ["0", "1"]}, {"prior": "0.01", "u": ["100", "1"]}],
          "experiments": {
            "sigma": [["1", "0"], ["1", "0"], ["0", "1"], ["0", "1"]],
            "uninformative": [["1/2", "1/2"], ["1/2", "1/2"], ["1/2", "1/2"], ["1/2", "1/2"]]}})",
       {
           exact("posterior(sigma,s_x)[w1]", "example: 49/50", Rational(49, 50),
                 [](const Document& d) { return posterior(d.env, d.experiment("sigma"), 0)[0]; }),
           exact("W(sigma)", "derived", Rational(2),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma")).total; }),
           exact("W(uninformative)", "derived", Rational(3, 2),
                 [](const Document& d) { return payoffs(d.env, d.experiment("uninformative")).total; }),
           exact("psi(x) sigma", "example: 1/50", Rational(1, 50),
                 [X](const Document& d) { return conf_exp(d, "sigma", X); }),
           exact("psi(x) uninformative", "derived", Rational(1, 2),
                 [X](const Document& d) { return conf_exp(d, "uninformative", X); }),
           verdict("example: sigma less random", "sigma", "uninformative", OrderingId::LessRandom, "StrictForward"),
           verdict("example: sigma pays more", "sigma", "uninformative", OrderingId::ChoicePayoffDom, "StrictForward"),
           verdict("example: uninformative more confident", "uninformative", "sigma", OrderingId::ConfidenceDom,
                   "StrictForward"),
           text("cmc(sigma), beta_bar = 0 / inf", "derived: within-pair KL is zero, across-pair KL infinite",
                "0 inf", [](const Document& d) {
                  const double inf = std::numeric_limits<double>::infinity();
                  auto beta = [inf](double bar) {
                    std::vector<std::vector<double>> b(4, std::vector<double>(4, bar));
                    b[0][1] = b[1][0] = b[2][3] = b[3][2] = inf;
                    for (int i = 0; i < 4; ++i) b[i][i] = 0;
                    return b;
                  };
                  auto show = [](double v) { return std::isinf(v) ? std::string("inf") : std::to_string(v == 0 ? 0 : 1); };
                  return show(families::cmc_cost(d.env, d.experiment("sigma"), beta(0))) + " " +
                         show(families::cmc_cost(d.env, d.experiment("sigma"), beta(inf)));
                }),
       }});

  cases.push_back(
      {"example3",
       std::string("{") + kBinaryStates + R"(, "experiments": {
         "g2": [["0.9", "0.1"], ["0.8", "0.2"]],
         "g3": [["0.9", "0.1"], ["0.7", "0.3"]]}})",
       {
           verdict("example: higher gamma pays more", "g3", "g2", OrderingId::ChoicePayoffDom, "StrictForward"),
           verdict("example: higher gamma more confident", "g3", "g2", OrderingId::ConfidenceDom, "StrictForward"),
           verdict("example: higher gamma more random", "g3", "g2", OrderingId::LessRandom, "StrictBackward"),
           verdict("derived: expected randomness 0.55 vs 0.5", "g3", "g2", OrderingId::ExpectedLessRandom,
                   "StrictBackward"),
           exact("psi(x|w1) g3", "derived: 0.9/1.6", Rational(9, 16),
                 [X](const Document& d) { return conf_cond(d, "g3", X, 0); }),
       }});

  cases.push_back(
      {"luce-probes",
       R"({"states": [
            {"prior": "1/4", "u": ["1", "0"]}, {"prior": "1/4", "u": ["0", "1"]},
            {"prior": "1/4", "u": ["3", "0"]}, {"prior": "1/4", "u": ["0", "3"]}]})",
       {
           printed("luce(1)(s1|w1)", "derived: logistic(1)", "0.7311",
                   [](const Document& d) { return families::luce(d.env, 1.0).at(0, 0); }),
           text("luce(1/2) vs luce(1)", "example: all three orders comonotone with 1/lambda",
                "StrictForward StrictForward StrictForward", [](const Document& d) {
                  Experiment a = families::luce(d.env, 0.5);
                  Experiment b = families::luce(d.env, 1.0);
                  return std::string(compare(d.env, a, b, OrderingId::ChoicePayoffDom).label()) + " " +
                         std::string(compare(d.env, a, b, OrderingId::LessRandom).label()) + " " +
                         compare(d.env, a, b, OrderingId::ConfidenceDom).label();
                }),
           text("luce(2) vs luce(1)", "example: all three orders comonotone with 1/lambda",
                "StrictBackward StrictBackward StrictBackward", [](const Document& d) {
                  Experiment a = families::luce(d.env, 2.0);
                  Experiment b = families::luce(d.env, 1.0);
                  return std::string(compare(d.env, a, b, OrderingId::ChoicePayoffDom).label()) + " " +
                         std::string(compare(d.env, a, b, OrderingId::LessRandom).label()) + " " +
                         compare(d.env, a, b, OrderingId::ConfidenceDom).label();
                }),
           flag("indicative(luce(1))", "derived", true,
                [](const Document& d) { return is_indicative(d.env, families::luce(d.env, 1.0)).indicative; }),
       }});

  cases.push_back(
      {"example4-table4",
       R"({"states": [
            {"prior": "1/4", "u": ["10", "0"]}, {"prior": "1/4", "u": ["0", "10"]},
            {"prior": "1/4", "u": ["1", "0"]}, {"prior": "1/4", "u": ["0", "1"]}],
          "experiments": {
            "sigma": [["0.49", "0.51"], ["0.5", "0.5"], ["0.9", "0.1"], ["0.1", "0.9"]],
            "sigma_p": [["0.48", "0.52"], ["0.52", "0.48"], ["0.95", "0.05"], ["0.05", "0.95"]]}})",
       {
           exact("W(sigma)", "example: 2.925", Rational::parse("2.925"),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma")).total; }),
           exact("W(sigma')", "example: 2.875", Rational::parse("2.875"),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma_p")).total; }),
           exact("advantage(sigma,s1)", "derived: 0.25*(4.9-5+0.9-0.1)", Rational(7, 40),
                 [](const Document& d) { return advantage(d.env, d.experiment("sigma"), 0); }),
           printed("psi(x|w1) sigma", "example: .698", "0.698",
                   [X](const Document& d) { return conf_cond(d, "sigma", X, 0); }),
           printed("psi(y|w1) sigma", "example: .697", "0.697",
                   [Y](const Document& d) { return conf_cond(d, "sigma", Y, 0); }),
           printed("psi(x|w1) sigma'", "example: .715", "0.715",
                   [X](const Document& d) { return conf_cond(d, "sigma_p", X, 0); }),
           text("randomness(sigma)", "derived", "51/100 1/2 9/10 9/10",
                [](const Document& d) { return join(randomness(induce(d.env, d.experiment("sigma"))).by_state); }),
           exact("Delta_13(sigma)", "derived: 0.49-0.9", Rational(-41, 100),
                 [](const Document& d) { return attenuation_deltas(d.env, d.experiment("sigma"))[0][2]; }),
           verdict("example: sigma' less random", "sigma_p", "sigma", OrderingId::LessRandom, "StrictForward"),
           verdict("example: sigma' more confident", "sigma_p", "sigma", OrderingId::ConfidenceDom, "StrictForward"),
           verdict("example: sigma' less attenuated", "sigma_p", "sigma", OrderingId::LessAttenuated, "StrictForward"),
           verdict("example: sigma pays more", "sigma_p", "sigma", OrderingId::ChoicePayoffDom, "StrictBackward"),
       }});

  cases.push_back(
      {"example5-table5",
       R"({"states": [
            {"prior": "0.1", "u": ["10", "0"]}, {"prior": "0.1", "u": ["0", "10"]},
            {"prior": "0.4", "u": ["1", "0"]}, {"prior": "0.4", "u": ["0", "1"]}],
          "experiments": {
            "sigma": [["0.7", "0.3"], ["0.3", "0.7"], ["0.2", "0.8"], ["0.8", "0.2"]],
            "sigma_p": [["0.7", "0.3"], ["0.3", "0.7"], ["0.18", "0.82"], ["0.82", "0.18"]]}})",
       {
           exact("payoff of a after s1 (sigma)", "example: 1.56", Rational::parse("1.56"),
                 [](const Document& d) { return signal_payoffs(d.env, d.experiment("sigma"))[0]->x; }),
           exact("psi(a) sigma", "example: 0.3", Rational(3, 10),
                 [X](const Document& d) { return conf_exp(d, "sigma", X); }),
           printed("payoff of a after s1 (sigma')", "example: 1.54", "1.54",
                   [](const Document& d) { return signal_payoffs(d.env, d.experiment("sigma_p"))[0]->x; }),
           exact("psi(a) sigma'", "derived: (0.07+0.072)/0.5", Rational(71, 250),
                 [X](const Document& d) { return conf_exp(d, "sigma_p", X); }),
           verdict("example: sigma' less attenuated", "sigma", "sigma_p", OrderingId::LessAttenuated,
                   "StrictBackward"),
           verdict("example: sigma more confident", "sigma", "sigma_p", OrderingId::ConfidenceDom, "StrictForward"),
           verdict("example: sigma pays more", "sigma", "sigma_p", OrderingId::ChoicePayoffDom, "StrictForward"),
       }});

  cases.push_back(
      {"roc-counterexample",
       R"({"states": [
            {"prior": "0.5", "u": ["1", "0"]}, {"prior": "0.45", "u": ["0", "0.1"]},
            {"prior": "0.05", "u": ["0", "10"]}],
          "allow_asymmetric": true,
          "experiments": {
            "sigma1": [["0.3", "0.3", "0.4"], ["0", "0.7", "0.3"], ["0.4", "0", "0.6"]],
            "sigma2": [["0.2", "0.4", "0.4"], ["0", "0.7", "0.3"], ["0.4", "0", "0.6"]]}})",
       {
           exact("TPR(sigma1) at FPR 0.04", "example: 0.3", Rational(3, 10),
                 [](const Document& d) { return roc(d.env, d.experiment("sigma1")).tpr_at(Rational(1, 25)); }),
           exact("TPR(sigma2) at FPR 0.04", "example: 0.2", Rational(1, 5),
                 [](const Document& d) { return roc(d.env, d.experiment("sigma2")).tpr_at(Rational(1, 25)); }),
           flag("roc(sigma2) dominates roc(sigma1)", "example: it does not", false, [](const Document& d) {
             return roc_dominates(roc(d.env, d.experiment("sigma2")), roc(d.env, d.experiment("sigma1"))).forward;
           }),
           verdict("derived: exact ROC comparison", "sigma1", "sigma2", OrderingId::RocDom, "StrictForward"),
           flag("sigma2 = aligned shift of sigma1", "derived: 0.1 moves from s1 to s2 in w1", true,
                [](const Document& d) {
                  Shift sh{ShiftKind::Aligned, 0, 0, 1, Rational(1, 10)};
                  return apply(d.env, d.experiment("sigma1"), sh) == d.experiment("sigma2");
                }),
           verdict("derived: aligned shift raises payoff", "sigma2", "sigma1", OrderingId::ChoicePayoffDom,
                   "StrictForward"),
       }});

  cases.push_back(
      {"coupling-counterexample",
       R"({"states": [
            {"prior": "0.3", "u": ["1", "0"]}, {"prior": "0.3", "u": ["0", "1"]},
            {"prior": "0.2", "u": ["2", "0"]}, {"prior": "0.2", "u": ["0", "2"]}],
          "experiments": {
            "sigma1": [["0.5", "0.5"], ["0.5", "0.5"], ["0.6", "0.4"], ["0.4", "0.6"]],
            "sigma2": [["0.6", "0.4"], ["0.4", "0.6"], ["0.5", "0.5"], ["0.5", "0.5"]]}})",
       {
           exact("W(sigma1)", "example: .78", Rational::parse("0.78"),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma1")).total; }),
           exact("W(sigma2)", "example: .76", Rational::parse("0.76"),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma2")).total; }),
           exact("W_psych(sigma1)", "example: .54", Rational::parse("0.54"),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma1")).psych; }),
           exact("W_psych(sigma2)", "example: .56", Rational::parse("0.56"),
                 [](const Document& d) { return payoffs(d.env, d.experiment("sigma2")).psych; }),
           text("aligned coupling of sigma2 over sigma1", "example: mu(1,1)=.1, mu(1,3)=.2, mu(3,1)=.2",
                "1/10 0 1/5 0 | 0 1/10 0 1/5 | 1/5 0 0 0 | 0 1/5 0 0", [](const Document& d) {
                  Problem p1(d.env, d.experiment("sigma1"));
                  Problem p2(d.env, d.experiment("sigma2"));
                  auto v = dominates(p2, p1, PairCriterion::AlignedDominance);
                  if (!v.forward_coupling) return std::string("infeasible");
                  std::string out;
                  for (const auto& row : *v.forward_coupling) {
                    out += (out.empty() ? "" : " | ") + join(row);
                  }
                  return out;
                }),
           flag("shift decomposition exists", "example: sigma1 -> sigma2 is not a shift sequence", false,
                [](const Document& d) {
                  return decompose(d.env, d.experiment("sigma1"), d.experiment("sigma2")).decomposable;
                }),
       }});

  cases.push_back(
      {"tie-state",
       R"({"states": [
            {"prior": "1/4", "u": ["1", "0"]}, {"prior": "1/4", "u": ["0", "1"]},
            {"prior": "1/2", "u": ["1/2", "1/2"]}],
          "experiments": {
            "sigma": [["3/4", "1/4"], ["1/4", "3/4"], ["3/4", "1/4"]],
            "sigma_p": [["3/4", "1/4"], ["1/4", "3/4"], ["1/2", "1/2"]]}})",
       {
           verdict("example: sigma less random", "sigma", "sigma_p", OrderingId::LessRandom, "StrictForward"),
           verdict("derived: sigma less random in expectation", "sigma", "sigma_p", OrderingId::ExpectedLessRandom,
                   "StrictForward"),
           verdict("example: state payoffs unchanged", "sigma", "sigma_p", OrderingId::StateConditionalPayoffDom,
                   "Equal"),
           verdict("example: confidence moves in opposite directions", "sigma", "sigma_p", OrderingId::ConfidenceDom,
                   "Incomparable"),
       }});

  return cases;
}

}  // namespace

const std::vector<CorpusCase>& corpus_cases() {
  static const std::vector<CorpusCase> cases = build();
  return cases;
}

bool printed_match(const Rational& value, std::string_view shown) {
  Rational x = Rational::parse(shown);
  auto dot = shown.find('.');
  const long digits = dot == std::string_view::npos ? 0 : static_cast<long>(shown.size() - dot - 1);
  Rational unit(1);
  for (long i = 0; i < digits; ++i) unit /= Rational(10);
  Rational diff = value - x;
  bool rounded = diff.abs() * Rational(2) <= unit;
  bool truncated = value.sign() >= 0 ? (diff.sign() >= 0 && diff < unit) : (diff.sign() <= 0 && diff.abs() < unit);
  return rounded || truncated;
}

CorpusReport run_corpus(std::string_view filter) {
  std::set<std::string> wanted;
  std::string f(filter);
  std::stringstream ss(f);
  for (std::string id; std::getline(ss, id, ',');) {
    if (!id.empty()) wanted.insert(id);
  }
  CorpusReport report;
  for (const auto& c : corpus_cases()) {
    if (!filter.empty() && !wanted.count(c.id)) continue;
    bool case_ok = true;
    std::optional<Document> doc;
    try {
      doc = parse_document(c.document, c.id);
    } catch (const Error& e) {
      report.results.push_back({c.id, "document", "", {"valid", e.what(), false}});
      report.failing_cases.push_back(c.id);
      continue;
    }
    for (const auto& check : c.checks) {
      CheckOutcome out;
      try {
        out = check.run(*doc);
      } catch (const Error& e) {
        out = {"", std::string("error: ") + e.what(), false};
      }
      case_ok = case_ok && out.pass;
      report.results.push_back({c.id, check.quantity, check.note, std::move(out)});
    }
    if (!case_ok) report.failing_cases.push_back(c.id);
  }
  return report;
}

void require_pass(const CorpusReport& report) {
  if (report.pass()) return;
  std::string ids;
  for (const auto& id : report.failing_cases) ids += (ids.empty() ? "" : ", ") + id;
  throw Error(ErrorCode::CorpusMismatch, "failing cases: " + ids);
}

std::vector<search::Witness> corpus_witnesses() {
  std::vector<search::Witness> out;
  for (const auto& c : corpus_cases()) {
    Document d = parse_document(c.document, c.id);
    for (const auto& [na, a] : d.experiments) {
      for (const auto& [nb, b] : d.experiments) {
        if (na != nb) out.push_back({c.id + ":" + na + "," + nb, d.env, a, b});
      }
    }
  }
  return out;
}

}  // namespace bwo
