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

#include "brickwall/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace brickwall {

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (long j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
    throw SchemaError("matrix: expected object with keys dim, re, im");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) {
    throw SchemaError("matrix: dim must be a positive integer");
  }
  const long dim = j["dim"].get<long>();
  const auto& re = j["re"];
  const auto& im = j["im"];
  auto check_rows = [dim](const Json& rows, const char* key) {
    if (!rows.is_array() || static_cast<long>(rows.size()) != dim) {
      throw SchemaError(std::string("matrix: ") + key + " must have dim rows");
    }
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<long>(row.size()) != dim) {
        throw SchemaError(std::string("matrix: ") + key + " rows must have dim entries");
      }
      for (const auto& v : row) {
        if (!v.is_number()) throw SchemaError(std::string("matrix: non-numeric entry in ") + key);
      }
    }
  };
  check_rows(re, "re");
  check_rows(im, "im");
  ComplexMatrix m(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c)
      m(r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(),
                        im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>());
  return m;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace brickwall
