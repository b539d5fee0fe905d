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

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

#include "brickwall/matrix_core.hpp"

namespace brickwall {

using Json = nlohmann::json;

/// Raised when an input document does not match its schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim": d, "re": [[...]], "im": [[...]]}, row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Writes to a sibling temp file and renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);
/// Parses JSON text, rethrowing parse failures as SchemaError.
Json parse_json(const std::string& text);

}  // namespace brickwall
