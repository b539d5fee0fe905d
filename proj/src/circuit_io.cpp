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

#include "brickwall/circuit_io.hpp"

namespace brickwall {

namespace {

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw SchemaError("gate axis must be x, y or z, got '" + s + "'");
}

std::string axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

const Json& require(const Json& obj, const char* key, const char* where) {
  if (!obj.contains(key)) throw SchemaError(std::string(where) + ": missing key \"" + key + "\"");
  return obj[key];
}

int require_int(const Json& obj, const char* key, const char* where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) throw SchemaError(std::string(where) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> require_wires(const Json& g, std::size_t expected) {
  const auto& w = require(g, "wires", "gate");
  if (!w.is_array() || w.size() != expected) {
    throw SchemaError("gate: \"wires\" must be an array of " + std::to_string(expected) + " integers");
  }
  std::vector<int> out;
  for (const auto& v : w) {
    if (!v.is_number_integer()) throw SchemaError("gate: wires must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json j;
    switch (g.kind) {
      case GateKind::Rot:
        j = {{"kind", "rot"}, {"axis", axis_name(g.axis)}, {"wires", {g.wires[0]}}, {"param", g.param}};
        break;
      case GateKind::CZ:
        j = {{"kind", "cz"}, {"wires", {g.wires[0], g.wires[1]}}};
        break;
      case GateKind::CIY:
        j = {{"kind", "ciy"}, {"wires", {g.wires[0], g.wires[1]}}};
        break;
      case GateKind::PPR: {
        Json support = Json::array();
        for (int q = 0; q < g.word.size(); ++q)
          if (g.word[q] != Pauli::I) support.push_back(q);
        j = {{"kind", "ppr"}, {"word", g.word.str()}, {"wires", support}, {"param", g.param}};
        if (g.scale != 1.0) j["scale"] = g.scale;
        break;
      }
      case GateKind::Clifford:
        j = {{"kind", "clifford"}, {"name", g.clifford == CliffordName::H ? "h" : "s"}, {"wires", {g.wires[0]}}};
        break;
    }
    gates.push_back(std::move(j));
  }
  return Json{{"n", c.num_qubits()}, {"gates", std::move(gates)}, {"d", c.num_params()}};
}

Circuit circuit_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("circuit: expected a JSON object");
  const int n = require_int(j, "n", "circuit");
  const auto& gates_json = require(j, "gates", "circuit");
  if (!gates_json.is_array()) throw SchemaError("circuit: \"gates\" must be an array");
  std::vector<Gate> gates;
  for (const auto& g : gates_json) {
    if (!g.is_object()) throw SchemaError("gate: expected an object");
    const auto& kind_json = require(g, "kind", "gate");
    if (!kind_json.is_string()) throw SchemaError("gate: \"kind\" must be a string");
    const auto kind = kind_json.get<std::string>();
    if (kind == "rot") {
      const auto& axis = require(g, "axis", "gate");
      if (!axis.is_string()) throw SchemaError("gate: \"axis\" must be a string");
      gates.push_back(Gate::rot(parse_axis(axis.get<std::string>()), require_wires(g, 1)[0],
                                require_int(g, "param", "gate")));
    } else if (kind == "cz") {
      const auto w = require_wires(g, 2);
      gates.push_back(Gate::cz(w[0], w[1]));
    } else if (kind == "ciy") {
      const auto w = require_wires(g, 2);
      gates.push_back(Gate::ciy(w[0], w[1]));
    } else if (kind == "ppr") {
      const auto& word = require(g, "word", "gate");
      if (!word.is_string()) throw SchemaError("gate: \"word\" must be a string");
      double scale = 1.0;
      if (g.contains("scale")) {
        if (!g["scale"].is_number()) throw SchemaError("gate: \"scale\" must be a number");
        scale = g["scale"].get<double>();
      }
      try {
        gates.push_back(Gate::ppr(PauliWord::parse(word.get<std::string>()), require_int(g, "param", "gate"), scale));
      } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("gate: ") + e.what());
      }
    } else if (kind == "clifford") {
      const auto& name = require(g, "name", "gate");
      if (!name.is_string() || (name != "h" && name != "s")) throw SchemaError("gate: clifford name must be h or s");
      gates.push_back(Gate::fixed_clifford(name == "h" ? CliffordName::H : CliffordName::S, require_wires(g, 1)[0]));
    } else {
      throw SchemaError("gate: unknown kind '" + kind + "'");
    }
  }
  try {
    Circuit c(n, std::move(gates));
    if (j.contains("d") && require_int(j, "d", "circuit") != c.num_params()) {
      throw SchemaError("circuit: \"d\" does not match the number of parametric gates");
    }
    return c;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("circuit: ") + e.what());
  }
}

Json params_to_json(const std::vector<double>& theta) { return Json(theta); }

std::vector<double> params_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("parameters: expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw SchemaError("parameters: non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace brickwall
