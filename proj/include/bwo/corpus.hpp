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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bwo/document.hpp"
#include "bwo/rational.hpp"
#include "bwo/search.hpp"

namespace bwo {

struct CheckOutcome {
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct CorpusCheck {
  std::string quantity;
  std::string note;  ///< where the expected value comes from
  std::function<CheckOutcome(const Document&)> run;
};

struct CorpusCase {
  std::string id;
  std::string document;  ///< JSON document text
  std::vector<CorpusCheck> checks;
};

struct CorpusResult {
  std::string case_id;
  std::string quantity;
  std::string note;
  CheckOutcome outcome;
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  std::vector<std::string> failing_cases;
  bool pass() const { return failing_cases.empty(); }
};

const std::vector<CorpusCase>& corpus_cases();

/// Runs the cases whose ids are listed in `filter` (comma separated), or all
/// cases when `filter` is empty. A filter matching nothing is a vacuous pass.
CorpusReport run_corpus(std::string_view filter = "");

/// Throws CorpusMismatch naming the failing case ids.
void require_pass(const CorpusReport& report);

/// True when `value` rounds (half away from zero) or truncates to the decimal
/// `printed`, at the number of digits printed.
bool printed_match(const Rational& value, std::string_view printed);

/// Every ordered pair of distinct experiments within each case.
std::vector<search::Witness> corpus_witnesses();

}  // namespace bwo
