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

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace brickwall {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Bit masks describing a Pauli word's action on computational basis states.
///
/// Qubit q occupies bit (n - 1 - q) of a basis index, so qubit 0 is the most
/// significant bit (leftmost tensor factor). For a basis index x,
///   W |x> = i^y_count * (-1)^popcount(x & z) |x ^ x_mask>.
struct PauliMask {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int y_count = 0;

  /// Matrix element W[x ^ this->x, x] for column x.
  std::complex<double> column_phase(std::uint64_t x_index) const;
};

/// A length-n word over {I, X, Y, Z}. Letter k acts on qubit k.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<Pauli> letters);

  /// Parses e.g. "XYZI". Lower-case letters are accepted. Throws
  /// std::invalid_argument on any other character or an empty string.
  static PauliWord parse(std::string_view text);
  static PauliWord identity(int n);
  static PauliWord single(int n, int wire, Pauli p);
  /// Word with lexicographic index `index` among all 4^n words (I < X < Y < Z,
  /// qubit 0 most significant).
  static PauliWord from_index(int n, std::uint64_t index);

  int size() const { return static_cast<int>(letters_.size()); }
  Pauli operator[](int q) const { return letters_[static_cast<std::size_t>(q)]; }
  const std::vector<Pauli>& letters() const { return letters_; }

  std::string str() const;
  std::uint64_t index() const;
  PauliMask mask() const;
  int y_count() const;
  int weight() const;
  bool is_identity() const;

  /// True iff the two words commute (even number of positions where both
  /// letters are non-identity and differ).
  bool commutes_with(const PauliWord& other) const;

  auto operator<=>(const PauliWord&) const = default;

 private:
  std::vector<Pauli> letters_;
};

/// i^phase * word.
struct PhasedPauli {
  int phase = 0;  // power of i, in [0, 4)
  PauliWord word;

  std::complex<double> coefficient() const;
};

PhasedPauli multiply(const PauliWord& a, const PauliWord& b);
PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b);

/// CZ(a, b) * P * CZ(a, b), tracked symbolically.
PhasedPauli conjugate_by_cz(const PhasedPauli& p, int a, int b);

/// All 4^n - 1 non-identity words in lexicographic order.
std::vector<PauliWord> nonidentity_words(int n);

}  // namespace brickwall
