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

// Small builders shared by the unit tests.

#include <string>
#include <vector>

#include "bwo/corpus.hpp"
#include "bwo/document.hpp"
#include "bwo/error.hpp"
#include "bwo/model.hpp"

namespace bwo::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* t : items) out.push_back(R(t));
  return out;
}

inline Experiment exp_of(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.push_back(Rs(row));
  return Experiment(std::move(r));
}

inline Document corpus_doc(const std::string& id) {
  for (const auto& c : corpus_cases()) {
    if (c.id == id) return parse_document(c.document, id);
  }
  throw Error(ErrorCode::InvalidArgument, "no corpus case " + id);
}

/// Two equally likely states, x correct in the first and y in the second.
inline Environment binary_env() {
  return Environment({{Rational(1, 2), Rational(1), Rational(0)}, {Rational(1, 2), Rational(0), Rational(1)}});
}

/// Rows (theta, 1-theta) and (1-gamma, gamma).
inline Experiment binary_exp(const Rational& theta, const Rational& gamma) {
  return Experiment({{theta, Rational(1) - theta}, {Rational(1) - gamma, gamma}});
}

inline Experiment revealing(std::size_t states_per_side = 1) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < states_per_side; ++i) {
    rows.push_back({Rational(1), Rational(0)});
    rows.push_back({Rational(0), Rational(1)});
  }
  return Experiment(std::move(rows));
}

}  // namespace bwo::testing

/// Asserts that `stmt` throws bwo::Error with the given code.
#define EXPECT_BWO_ERROR(stmt, expected_code)                                      \
  do {                                                                             \
    try {                                                                          \
      stmt;                                                                        \
      ADD_FAILURE() << "expected " << ::bwo::error_code_name(expected_code);       \
    } catch (const ::bwo::Error& e) {                                              \
      EXPECT_EQ(e.code(), expected_code) << e.what();                              \
    }                                                                              \
  } while (0)
