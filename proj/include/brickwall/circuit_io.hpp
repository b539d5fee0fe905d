// Copyright 2026 The Brickwall Authors
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

#include <vector>

#include "brickwall/circuit.hpp"
#include "brickwall/matrix_io.hpp"

namespace brickwall {

/// {"n": int, "gates": [...], "d": int}. Gate objects carry "kind" (rot, cz,
/// ciy, ppr, clifford), "wires", and where applicable "axis", "param",
/// "word", "scale" (PPR, omitted when 1) and "name" (h, s).
Json circuit_to_json(const Circuit& c);
/// Throws SchemaError on any structural problem.
Circuit circuit_from_json(const Json& j);

Json params_to_json(const std::vector<double>& theta);
std::vector<double> params_from_json(const Json& j);

}  // namespace brickwall
