// Copyright 2026 The paulisynth Authors
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

#include "paulisynth/hamiltonian_parser.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "paulisynth/errors.hpp"

namespace paulisynth {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         c == '_';
}

std::optional<Pauli> pauli_letter(char c) {
  switch (c) {
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      return std::nullopt;
  }
}

class Parser {
 public:
  Parser(std::string_view text, unsigned n_qubits)
      : text_(text), n_qubits_(n_qubits) {}

  Hamiltonian parse() {
    skip_blank();
    if (at_end()) throw ParseError(pos_, "empty input");

    std::vector<PauliTerm> terms;
    double sign = 1.0;
    if (peek() == '-' && !number_follows()) {
      sign = -1.0;
      ++pos_;
      skip_blank();
    }
    terms.push_back(term(sign));
    for (;;) {
      skip_blank();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') {
        throw ParseError(pos_, unknown_token());
      }
      sign = c == '-' ? -1.0 : 1.0;
      ++pos_;
      skip_blank();
      if (at_end()) throw ParseError(pos_, "expected a term after '" +
                                               std::string(1, c) + "'");
      terms.push_back(term(sign));
    }
    return Hamiltonian(n_qubits_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_blank() {
    while (!at_end()) {
      if (is_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // A signed literal only starts at '+'/'-' when a digit or '.' follows.
  bool number_follows() const {
    char c = peek();
    if (is_digit(c) || c == '.') return true;
    if (c == '+' || c == '-') {
      char d = peek(1);
      return is_digit(d) || d == '.';
    }
    return false;
  }

  std::string unknown_token() const { return unknown_token_at(pos_); }

  double number() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t mantissa_digits = 0;
    while (is_digit(peek())) ++pos_, ++mantissa_digits;
    if (peek() == '.') {
      ++pos_;
      while (is_digit(peek())) ++pos_, ++mantissa_digits;
    }
    if (mantissa_digits == 0) throw ParseError(start, "malformed number");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!is_digit(peek())) throw ParseError(start, "malformed number");
      while (is_digit(peek())) ++pos_;
    }
    if (is_word(peek()) || peek() == '.') {
      throw ParseError(start, "malformed number");
    }

    std::size_t first = start;
    if (text_[first] == '+') ++first;
    double value = 0.0;
    const char* begin = text_.data() + first;
    const char* end = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      throw ParseError(start, "malformed number");
    }
    return value;
  }

  PauliTerm term(double sign) {
    double coefficient = 1.0;
    if (number_follows()) {
      coefficient = number();
      skip_blank();
      if (peek() != '*') {
        throw ParseError(pos_, "expected '*' after coefficient");
      }
      ++pos_;
      skip_blank();
      if (peek() == 'I' && peek(1) == 'd' && !is_word(peek(2))) {
        pos_ += 2;
        return PauliTerm(sign * coefficient, PauliString::identity(n_qubits_));
      }
    }

    std::vector<Pauli> ops(n_qubits_, Pauli::I);
    std::size_t n_factors = 0;
    while (auto op = pauli_letter(peek())) {
      const std::size_t factor_pos = pos_;
      ++pos_;
      if (!is_digit(peek())) {
        throw ParseError(pos_, "expected qubit index after '" +
                                   std::string(1, to_char(*op)) + "'");
      }
      std::uint64_t index = 0;
      while (is_digit(peek())) {
        index = index * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (index > (std::uint64_t{1} << 32)) {
          throw ParseError(factor_pos, "qubit index too large");
        }
        ++pos_;
      }
      if (is_word(peek())) {
        throw ParseError(factor_pos, unknown_token_at(factor_pos));
      }
      if (index >= n_qubits_) {
        throw ParseError(factor_pos,
                         "qubit index " + std::to_string(index) +
                             " out of range for " + std::to_string(n_qubits_) +
                             " qubits");
      }
      if (ops[index] != Pauli::I) {
        throw ParseError(factor_pos, "qubit " + std::to_string(index) +
                                         " appears twice in one term");
      }
      ops[index] = *op;
      ++n_factors;
      skip_blank();
    }
    if (n_factors == 0) {
      if (at_end()) throw ParseError(pos_, "expected a Pauli factor");
      throw ParseError(pos_, unknown_token());
    }
    return PauliTerm(sign * coefficient, PauliString(std::move(ops)));
  }

  std::string unknown_token_at(std::size_t at) const {
    std::size_t end = at + 1;
    if (is_word(text_[at])) {
      while (end < text_.size() && is_word(text_[end])) ++end;
    }
    return "unknown token '" + std::string(text_.substr(at, end - at)) + "'";
  }

  std::string_view text_;
  unsigned n_qubits_;
  std::size_t pos_ = 0;
};

}  // namespace

Hamiltonian parse_hamiltonian(std::string_view text, unsigned n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("n_qubits must be positive");
  }
  return Parser(text, n_qubits).parse();
}

std::string format_coefficient(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_hamiltonian(const Hamiltonian& h) {
  std::string out;
  bool first = true;
  for (const PauliTerm& term : h.terms()) {
    if (!first) out += " + ";
    first = false;
    out += format_coefficient(term.coefficient());
    out += '*';
    const PauliString& p = term.string();
    if (p.weight() == 0) {
      out += "Id";
      continue;
    }
    bool first_factor = true;
    for (Qubit q : p.support()) {
      if (!first_factor) out += ' ';
      first_factor = false;
      out += to_char(p[q]);
      out += std::to_string(q);
    }
  }
  return out;
}

}  // namespace paulisynth
