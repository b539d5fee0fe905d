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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "brickwall/circuit_io.hpp"
#include "brickwall/matrix_io.hpp"
#include "brickwall/templates.hpp"
#include "test_util.hpp"

namespace brickwall {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir()
      : path_(fs::temp_directory_path() /
              (std::string("brickwall_io_") + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(MatrixJson, RoundTripIsExact) {
  const auto u = haar_unitary(3, 2);
  const auto j = matrix_to_json(u);
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(matrix_from_json(j), u);
  EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), u);
}

TEST(MatrixJson, MalformedInputs) {
  EXPECT_THROW(matrix_from_json(Json::array()), SchemaError);
  EXPECT_THROW(matrix_from_json(Json{{"dim", 2}, {"re", {{1, 0}, {0, 1}}}}), SchemaError);
  EXPECT_THROW(matrix_from_json(Json{{"dim", 2}, {"re", {{1, 0}}}, {"im", {{0, 0}}}}), SchemaError);
  EXPECT_THROW(matrix_from_json(Json{{"dim", 2}, {"re", {{1, 0}, {0, "x"}}}, {"im", {{0, 0}, {0, 0}}}}), SchemaError);
  EXPECT_THROW(matrix_from_json(Json{{"dim", 0}, {"re", Json::array()}, {"im", Json::array()}}), SchemaError);
  EXPECT_THROW(parse_json("{\"dim\": "), SchemaError);
}

TEST(CircuitJson, RoundTripEveryGateKind) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_circuit(1 + trial % 4, 20, rng);
    const auto j = circuit_to_json(c);
    EXPECT_EQ(j["d"], c.num_params());
    EXPECT_EQ(circuit_from_json(Json::parse(j.dump())), c);
  }
  const auto t = to_ppr(build_template(GroupLabel::SU, 3));
  EXPECT_EQ(circuit_from_json(circuit_to_json(t)), t);
}

TEST(CircuitJson, GateLayout) {
  const auto c = CircuitBuilder(2).rot(Axis::Y, 1).cz(0, 1).ppr(PauliWord::parse("XZ"), -0.5).build();
  const auto j = circuit_to_json(c);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["gates"][0]["kind"], "rot");
  EXPECT_EQ(j["gates"][0]["axis"], "y");
  EXPECT_EQ(j["gates"][0]["wires"], Json::array({1}));
  EXPECT_EQ(j["gates"][1]["kind"], "cz");
  EXPECT_EQ(j["gates"][2]["word"], "XZ");
  EXPECT_EQ(j["gates"][2]["scale"], -0.5);
  EXPECT_FALSE(circuit_to_json(CircuitBuilder(1).ppr(PauliWord::parse("X")).build())["gates"][0].contains("scale"));
}

TEST(CircuitJson, MalformedInputs) {
  const auto ok = circuit_to_json(CircuitBuilder(2).rot(Axis::X, 0).cz(0, 1).build());
  auto bad_kind = ok;
  bad_kind["gates"][0]["kind"] = "swap";
  auto bad_axis = ok;
  bad_axis["gates"][0]["axis"] = "w";
  auto bad_wire = ok;
  bad_wire["gates"][1]["wires"] = Json::array({0, 5});
  auto same_wire = ok;
  same_wire["gates"][1]["wires"] = Json::array({1, 1});
  auto bad_d = ok;
  bad_d["d"] = 4;
  auto bad_param = ok;
  bad_param["gates"][0]["param"] = 3;
  auto no_gates = ok;
  no_gates.erase("gates");
  auto bad_n = ok;
  bad_n["n"] = "two";
  for (const auto* j : {&bad_kind, &bad_axis, &bad_wire, &same_wire, &bad_d, &bad_param, &no_gates, &bad_n}) {
    EXPECT_THROW(circuit_from_json(*j), SchemaError) << j->dump();
  }
  EXPECT_THROW(circuit_from_json(Json::parse(R"({"n": 2, "gates": [{"kind": "ppr", "word": "XYZ", "param": 0}]})")),
               SchemaError);
}

TEST(ParamsJson, RoundTrip) {
  const std::vector<double> theta{0.1, -2.5, 1e-300, 3.141592653589793};
  EXPECT_EQ(params_from_json(Json::parse(params_to_json(theta).dump())), theta);
  EXPECT_THROW(params_from_json(Json{{"theta", "x"}}), SchemaError);
}

TEST(AtomicWrite, ReplacesContentAndLeavesNoTemp) {
  TempDir dir;
  const auto file = dir.path() / "out.json";
  write_text_atomic(file, "first");
  EXPECT_EQ(read_text(file), "first");
  write_text_atomic(file, "second\n");
  EXPECT_EQ(read_text(file), "second\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path())) ++entries;
  EXPECT_EQ(entries, 1);
}

TEST(AtomicWrite, FailureKeepsPreviousFile) {
  TempDir dir;
  const auto file = dir.path() / "keep.txt";
  write_text_atomic(file, "old");
  EXPECT_THROW(write_text_atomic(dir.path() / "missing" / "x.txt", "new"), std::runtime_error);
  EXPECT_EQ(read_text(file), "old");
  EXPECT_THROW(read_text(dir.path() / "nope.txt"), std::runtime_error);
}

}  // namespace
}  // namespace brickwall
