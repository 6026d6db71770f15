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

#include <string>

namespace bwo {

/// Two-sided weak dominance: forward is "first >= second", backward the
/// converse.
struct OrderVerdict {
  bool forward = false;
  bool backward = false;

  bool equal() const { return forward && backward; }
  bool incomparable() const { return !forward && !backward; }
  bool strict_forward() const { return forward && !backward; }
  bool strict_backward() const { return backward && !forward; }
  OrderVerdict flipped() const { return {backward, forward}; }
  std::string label() const {
    if (forward && backward) return "Equal";
    if (forward) return "StrictForward";
    if (backward) return "StrictBackward";
    return "Incomparable";
  }
  friend bool operator==(const OrderVerdict&, const OrderVerdict&) = default;
};

}  // namespace bwo
