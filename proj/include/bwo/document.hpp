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

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwo/model.hpp"

namespace bwo {

/// An environment with named experiments, as read from or written to the
/// JSON document format:
///
///   { "options": ["x","y"],
///     "states": [ {"prior": "49/100", "u": ["1","0"]}, ... ],
///     "experiments": { "sigma": [["0.49","0.51"], ...] },
///     "allow_asymmetric": false }
///
/// Numbers are strings ("p/q" or decimal) or JSON integers. Experiment order
/// is preserved.
struct Document {
  std::array<std::string, 2> options{"x", "y"};
  Environment env;
  std::vector<std::pair<std::string, Experiment>> experiments;

  /// Throws InvalidArgument for an unknown name.
  const Experiment& experiment(std::string_view name) const;
  /// The named experiment, or the first one when `name` is empty.
  const Experiment& experiment_or_first(std::string_view name) const;
};

/// Throws ParseError with the byte offset or JSON path of the problem, and the
/// model's validation errors for invalid contents.
Document parse_document(std::string_view text, std::string_view origin = "<input>");
Document load_document(const std::string& path);

/// Canonical rendering, numbers as "p/q" strings, two-space indentation.
std::string dump_document(const Document& doc);

}  // namespace bwo
