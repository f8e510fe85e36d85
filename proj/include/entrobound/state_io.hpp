// Copyright 2026 The Entrobound Authors
//
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

#include <optional>
#include <string>
#include <string_view>

#include "entrobound/fvdg.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// A parsed state document: {"dim_a", "dim_b", "kind": "qc" | "dense",
// "blocks": [{"weight", "matrix"}], "matrix"}. Complex entries are [re, im];
// a bare number is read as a real entry.
struct ParsedState {
  int dim_a;
  int dim_b;
  DensityOperator density;
  std::optional<QCState> qc;  // set for kind "qc"
};

struct StatePair {
  ParsedState rho;
  ParsedState sigma;
};

// {"rho": state, "sigma": state}. Malformed JSON throws kParseError; schema
// problems throw kValidationError; invalid matrices keep their own codes
// (kTraceNotOne, kNonHermitian, ...).
StatePair parse_state_pair(std::string_view text);
ParsedState parse_state(std::string_view text);

std::string state_to_json(const QCState& s);
std::string state_pair_to_json(const QCState& rho, const QCState& sigma);
std::string report_to_json(const SaturationReport& r);

}  // namespace entrobound
