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

#include "brickwall/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace brickwall {

namespace {

constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Single-letter product a*b = i^phase * letter.
struct LetterProduct {
  int phase;
  Pauli letter;
};

LetterProduct letter_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {0, b};
  if (b == Pauli::I) return {0, a};
  if (a == b) return {0, Pauli::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // X=1, Y=2, Z=3: cyclic order X->Y->Z gives +i.
  const int third = 6 - ia - ib;
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? 1 : 3, static_cast<Pauli>(third)};
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::complex<double> PauliMask::column_phase(std::uint64_t x_index) const {
  const int sign = std::popcount(x_index & z) & 1;
  return kIPowers[(y_count + 2 * sign) & 3];
}

PauliWord::PauliWord(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

PauliWord PauliWord::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Pauli word");
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': case 'i': letters.push_back(Pauli::I); break;
      case 'X': case 'x': letters.push_back(Pauli::X); break;
      case 'Y': case 'y': letters.push_back(Pauli::Y); break;
      case 'Z': case 'z': letters.push_back(Pauli::Z); break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" + std::string(1, c) +
                                    "' in word \"" + std::string(text) + "\"");
    }
  }
  return PauliWord(std::move(letters));
}

PauliWord PauliWord::identity(int n) {
  return PauliWord(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
}

PauliWord PauliWord::single(int n, int wire, Pauli p) {
  if (wire < 0 || wire >= n) throw std::out_of_range("wire out of range");
  auto w = identity(n);
  w.letters_[static_cast<std::size_t>(wire)] = p;
  return w;
}

PauliWord PauliWord::from_index(int n, std::uint64_t index) {
  std::vector<Pauli> letters(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    letters[static_cast<std::size_t>(q)] = static_cast<Pauli>(index & 3u);
    index >>= 2;
  }
  return PauliWord(std::move(letters));
}

std::string PauliWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto p : letters_) s.push_back(pauli_char(p));
  return s;
}

std::uint64_t PauliWord::index() const {
  std::uint64_t idx = 0;
  for (auto p : letters_) idx = (idx << 2) | static_cast<std::uint64_t>(p);
  return idx;
}

PauliMask PauliWord::mask() const {
  PauliMask m;
  const int n = size();
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (letters_[static_cast<std::size_t>(q)]) {
      case Pauli::I: break;
      case Pauli::X: m.x |= bit; break;
      case Pauli::Y: m.x |= bit; m.z |= bit; ++m.y_count; break;
      case Pauli::Z: m.z |= bit; break;
    }
  }
  return m;
}

int PauliWord::y_count() const {
  int c = 0;
  for (auto p : letters_) c += p == Pauli::Y;
  return c;
}

int PauliWord::weight() const {
  int c = 0;
  for (auto p : letters_) c += p != Pauli::I;
  return c;
}

bool PauliWord::is_identity() const { return weight() == 0; }

bool PauliWord::commutes_with(const PauliWord& other) const {
  if (other.size() != size()) throw std::invalid_argument("Pauli word length mismatch");
  int clashes = 0;
  for (int q = 0; q < size(); ++q) {
    const auto a = (*this)[q];
    const auto b = other[q];
    clashes += a != Pauli::I && b != Pauli::I && a != b;
  }
  return clashes % 2 == 0;
}

std::complex<double> PhasedPauli::coefficient() const { return kIPowers[phase & 3]; }

PhasedPauli multiply(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli word length mismatch");
  std::vector<Pauli> letters(static_cast<std::size_t>(a.size()));
  int phase = 0;
  for (int q = 0; q < a.size(); ++q) {
    const auto lp = letter_product(a[q], b[q]);
    phase += lp.phase;
    letters[static_cast<std::size_t>(q)] = lp.letter;
  }
  return {phase & 3, PauliWord(std::move(letters))};
}

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
  auto p = multiply(a.word, b.word);
  p.phase = (p.phase + a.phase + b.phase) & 3;
  return p;
}

PhasedPauli conjugate_by_cz(const PhasedPauli& p, int a, int b) {
  const int n = p.word.size();
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
    throw std::invalid_argument("invalid CZ wires");
  }
  // CZ X_a CZ = X_a Z_b and CZ Z_a CZ = Z_a; conjugation is multiplicative.
  PhasedPauli out{p.phase, PauliWord::identity(n)};
  for (int q = 0; q < n; ++q) {
    const Pauli letter = p.word[q];
    if (letter == Pauli::I) continue;
    PhasedPauli image{0, PauliWord::single(n, q, letter)};
    if ((q == a || q == b) && (letter == Pauli::X || letter == Pauli::Y)) {
      const int partner = q == a ? b : a;
      image = multiply(image, PhasedPauli{0, PauliWord::single(n, partner, Pauli::Z)});
    }
    out = multiply(out, image);
  }
  return out;
}

std::vector<PauliWord> nonidentity_words(int n) {
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  std::vector<PauliWord> words;
  words.reserve(static_cast<std::size_t>(total - 1));
  for (std::uint64_t i = 1; i < total; ++i) words.push_back(PauliWord::from_index(n, i));
  return words;
}

}  // namespace brickwall
