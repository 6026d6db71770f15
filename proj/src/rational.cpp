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

#include "bwo/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "bwo/error.hpp"

namespace bwo {

namespace {

[[noreturn]] void bad_number(std::string_view text, const char* why) {
  throw Error(ErrorCode::ParseError, "invalid number '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text, "expected p/q");
    mpz_class d{std::string(den), 10};
    if (d == 0) bad_number(text, "zero denominator");
    value = mpq_class(mpz_class{std::string(num), 10}, d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_neg = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_neg = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text, "bad exponent");
      exponent = std::stol(std::string(exp_text));
      if (exp_neg) exponent = -exponent;
      s = s.substr(0, e);
    }
    auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text, "no digits");
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text, "bad integer part");
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text, "bad fraction part");
    if (dot != std::string_view::npos && frac_part.empty() && int_part.empty()) bad_number(text, "no digits");
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      value = mpq_class(mantissa, pow10(static_cast<unsigned long>(scale)));
    } else {
      value = mpq_class(mantissa * pow10(static_cast<unsigned long>(-scale)));
    }
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

Rational Rational::nearest(double x, unsigned long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot snap a non-finite value");
  if (max_den == 0) throw Error(ErrorCode::InvalidArgument, "denominator bound must be positive");
  // Continued-fraction convergents of the exact binary value of x, then the
  // best semiconvergent under the bound.
  mpq_class target(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpq_class rest = target;
  const mpz_class bound(max_den);
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class q2 = a * q1 + q0;
    if (q2 > bound) {
      mpz_class k = (bound - q0) / q1;
      mpq_class semi(k * p1 + p0, k * q1 + q0);
      mpq_class conv(p1, q1);
      semi.canonicalize();
      conv.canonicalize();
      mpq_class ds = ::abs(mpq_class(semi - target));
      mpq_class dc = ::abs(mpq_class(conv - target));
      return Rational(ds < dc ? semi : conv);
    }
    mpz_class p2 = a * p1 + p0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpq_class frac = rest - mpq_class(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return Rational(mpq_class(p1, q1));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale = pow10(static_cast<unsigned long>(digits));
  mpq_class scaled = ::abs(q_) * scale;
  // Round half away from zero.
  mpz_class twice = 2 * scaled.get_num() + scaled.get_den();
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * scaled.get_den()).get_mpz_t());
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  bool negative = q_ < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidEnvironment: return "InvalidEnvironment";
    case ErrorCode::AsymmetricPrior: return "AsymmetricPrior";
    case ErrorCode::InvalidExperiment: return "InvalidExperiment";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroProbabilitySignal: return "ZeroProbabilitySignal";
    case ErrorCode::InvalidShift: return "InvalidShift";
    case ErrorCode::ClassificationChanged: return "ClassificationChanged";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TieStatesPresent: return "TieStatesPresent";
    case ErrorCode::HypothesisMassNotHalf: return "HypothesisMassNotHalf";
    case ErrorCode::TieStatePresent: return "TieStatePresent";
    case ErrorCode::TieSignalPresent: return "TieSignalPresent";
    case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonPositiveVariance: return "NonPositiveVariance";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CorpusMismatch: return "CorpusMismatch";
  }
  return "Error";
}

}  // namespace bwo
