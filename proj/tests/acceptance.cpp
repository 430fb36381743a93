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

// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paulisynth/errors.hpp"
#include "paulisynth/hamiltonian_parser.hpp"
#include "paulisynth/oracle.hpp"
#include "paulisynth/qasm.hpp"
#include "paulisynth/synthesis.hpp"

using namespace paulisynth;

namespace {

constexpr double kSynthTol = 1e-10;
constexpr double kStructTol = 1e-12;
constexpr double kExhaustiveSeconds = 10.0;
constexpr double kRandomSeconds = 60.0;
constexpr double kTimes[] = {0.1, 0.7, std::numbers::pi / 3, -1.2};
constexpr SynthVariant kVariants[] = {SynthVariant::ZLadder,
                                      SynthVariant::XLadder,
                                      SynthVariant::Mixed};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<PauliString> all_strings(unsigned n) {
  std::vector<PauliString> out;
  for (unsigned code = 0; code < (1u << (2 * n)); ++code) {
    std::vector<Pauli> ops(n);
    for (unsigned q = 0; q < n; ++q) {
      ops[q] = static_cast<Pauli>((code >> (2 * (n - 1 - q))) & 3u);
    }
    out.emplace_back(std::move(ops));
  }
  return out;
}

std::vector<PauliString> exhaustive_set() {
  std::vector<PauliString> out;
  for (unsigned n = 1; n <= 3; ++n) {
    for (auto& p : all_strings(n)) out.push_back(std::move(p));
  }
  return out;
}

PauliString random_string(std::mt19937_64& rng, unsigned n) {
  std::vector<Pauli> ops(n);
  for (auto& op : ops) op = static_cast<Pauli>(rng() % 4);
  return PauliString(std::move(ops));
}

double term_error(const PauliString& p, double t, SynthVariant v) {
  return oracle::frobenius_distance(
      oracle::circuit_unitary(exp_pauli_term(PauliTerm(1.0, p), t, v)),
      oracle::exp_pauli_closed_form(p, t));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome exhaustive_correctness() {
  double worst = 0.0;
  std::size_t checked = 0;
  for (const PauliString& p : exhaustive_set()) {
    for (SynthVariant v : kVariants) {
      for (double t : kTimes) {
        worst = std::max(worst, term_error(p, t, v));
        ++checked;
      }
    }
  }
  return {worst <= kSynthTol, std::to_string(checked) + " circuits, max " +
                                  sci(worst) + " <= " + sci(kSynthTol)};
}

Outcome random_correctness() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  std::size_t checked = 0;
  for (unsigned n = 4; n <= 8; ++n) {
    for (int i = 0; i < 200; ++i) {
      const PauliString p = random_string(rng, n);
      const double t = kTimes[rng() % std::size(kTimes)];
      worst = std::max(worst, term_error(p, t, SynthVariant::ZLadder));
      ++checked;
    }
  }
  return {worst <= kSynthTol, std::to_string(checked) + " circuits, max " +
                                  sci(worst) + " <= " + sci(kSynthTol)};
}

Outcome golden_circuits() {
  const double t = 0.7;
  bool ok = true;
  std::string detail;

  // (a) XZ against CZ . RX(2t) . CZ.
  const QuantumCircuit czrxcz(
      2, {Gate::cz(0, 1), Gate::rx(0, 2 * t), Gate::cz(0, 1)});
  const double da = oracle::frobenius_distance(
      oracle::circuit_unitary(
          exp_pauli_term(PauliTerm(1.0, PauliString::from_dense("XZ")), t)),
      oracle::circuit_unitary(czrxcz));
  ok &= da <= kStructTol;
  detail += "(a) " + sci(da);

  // (b) The 6-qubit listing (S1 H1 S3 H3 H5).ladder.(H1 Sdg1 H3 Sdg3 H5),
  // rightmost operator first.
  const std::vector<Gate> listing{
      Gate::h(5),     Gate::sdg(3),   Gate::h(3),         Gate::sdg(1),
      Gate::h(1),     Gate::cx(5, 3), Gate::cx(3, 1),     Gate::rz(1, 2 * t),
      Gate::cx(3, 1), Gate::cx(5, 3), Gate::h(5),         Gate::h(3),
      Gate::s(3),     Gate::h(1),     Gate::s(1)};
  const bool b = exp_pauli_term(PauliTerm(1.0, PauliString::from_dense("IYIYIX")),
                                t)
                     .gates() == listing;
  ok &= b;
  detail += std::string(", (b) ") + (b ? "gate-for-gate" : "MISMATCH");

  // (c) Single Z is RZ(2t).
  const bool c =
      exp_pauli_term(PauliTerm(1.0, PauliString::from_dense("Z")), t).gates() ==
      std::vector<Gate>{Gate::rz(0, 2 * t)};
  ok &= c;
  detail += std::string(", (c) ") + (c ? "[RZ(2t)]" : "MISMATCH");
  return {ok, detail};
}

Outcome gate_count_formulas() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (const PauliString& p : exhaustive_set()) {
    const unsigned k = p.weight();
    if (k == 0) continue;
    std::size_t x = 0;
    std::size_t y = 0;
    for (Pauli op : p.ops()) {
      x += op == Pauli::X;
      y += op == Pauli::Y;
    }
    const GateCounts c = gate_counts(exp_pauli_term(PauliTerm(1.0, p), 0.7));
    const bool ok = c[GateKind::CX] == 2 * (k - 1) && c[GateKind::RZ] == 1 &&
                    c[GateKind::H] == 2 * (x + y) && c[GateKind::S] == y &&
                    c[GateKind::Sdg] == y;
    bad += !ok;
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " strings, " +
                        std::to_string(bad) + " violations"};
}

Outcome structural_identities() {
  double worst_inverse = 0.0;
  double worst_cancel = 0.0;
  double worst_variant = 0.0;
  bool involution = true;
  for (const PauliString& p : exhaustive_set()) {
    const PauliTerm term(1.0, p);
    for (double t : kTimes) {
      std::vector<oracle::UnitaryMatrix> per_variant;
      for (SynthVariant v : kVariants) {
        const QuantumCircuit c = exp_pauli_term(term, t, v);
        const auto u = oracle::circuit_unitary(c);
        involution &= dagger(dagger(c)) == c;
        worst_inverse = std::max(
            worst_inverse,
            oracle::frobenius_distance(
                oracle::circuit_unitary(exp_pauli_term(term, -t, v)),
                oracle::circuit_unitary(dagger(c))));
        QuantumCircuit doubled = c;
        doubled.add(c);
        worst_cancel = std::max(
            worst_cancel,
            oracle::frobenius_distance(
                oracle::circuit_unitary(cancel_adjacent(doubled)),
                oracle::circuit_unitary(doubled)));
        per_variant.push_back(u);
      }
      for (std::size_t i = 0; i < per_variant.size(); ++i) {
        for (std::size_t j = i + 1; j < per_variant.size(); ++j) {
          worst_variant = std::max(
              worst_variant,
              oracle::frobenius_distance(per_variant[i], per_variant[j]));
        }
      }
    }
  }
  const bool ok = involution && worst_inverse <= kStructTol &&
                  worst_cancel <= kStructTol && worst_variant <= kSynthTol;
  return {ok, std::string("involution ") + (involution ? "ok" : "BROKEN") +
                  ", inverse " + sci(worst_inverse) + ", cancel " +
                  sci(worst_cancel) + ", variants " + sci(worst_variant)};
}

Outcome trotter_behaviour() {
  const Hamiltonian one(2, {PauliTerm(0.5, PauliString::from_dense("ZZ"))});
  const double t = 1.0;
  double worst_single = 0.0;
  for (unsigned reps = 1; reps <= 8; ++reps) {
    worst_single = std::max(
        worst_single,
        oracle::frobenius_distance(
            oracle::circuit_unitary(trotter_circuit(one, EvolutionParams(t, reps))),
            oracle::exp_pauli_closed_form(PauliString::from_dense("ZZ"), 0.5 * t)));
  }

  const Hamiltonian h =
      parse_hamiltonian("0.5*Z0 Z1 + 0.3*X0 + 0.2*Y1", 2);
  const auto exact =
      oracle::matrix_exponential(oracle::hamiltonian_matrix(h), t);
  auto error = [&](unsigned reps) {
    return oracle::phase_invariant_distance(
        oracle::circuit_unitary(trotter_circuit(h, EvolutionParams(t, reps))),
        exact);
  };
  const double e4 = error(4);
  const double e8 = error(8);
  const double ratio = e4 / e8;
  const bool ok = worst_single <= kStructTol && ratio >= 1.6 && ratio <= 2.4;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "one-term max %s, err(4)=%.4e err(8)=%.4e ratio %.4f in "
                "[1.6, 2.4]",
                sci(worst_single).c_str(), e4, e8, ratio);
  return {ok, buf};
}

Outcome parser_round_trip() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 8);
    const std::size_t n_terms = 1 + rng() % 10;
    std::vector<PauliTerm> terms;
    for (std::size_t k = 0; k < n_terms; ++k) {
      double w = coeff(rng);
      if (rng() % 4 == 0) w = std::ldexp(w, static_cast<int>(rng() % 41) - 20);
      terms.emplace_back(w, random_string(rng, n));
    }
    const Hamiltonian h(n, std::move(terms));
    if (parse_hamiltonian(format_hamiltonian(h), n) != h) ++mismatches;
  }

  std::size_t fuzzed = 0;
  std::size_t accepted = 0;
  const std::string alphabet = "XYZId0123456789 .+-*eE#\n";
  for (int i = 0; i < 20000; ++i) {
    std::string text(rng() % 32, '\0');
    for (char& c : text) {
      c = i % 2 ? static_cast<char>(rng() & 0xff)
                : alphabet[rng() % alphabet.size()];
    }
    try {
      parse_hamiltonian(text, 5);
      ++accepted;
    } catch (const ParseError&) {
    }
    ++fuzzed;
  }
  return {mismatches == 0,
          "1000 round-trips, " + std::to_string(mismatches) +
              " mismatches; " + std::to_string(fuzzed) + " fuzz inputs (" +
              std::to_string(accepted) + " accepted), no crash"};
}

Outcome qasm_golden() {
  const std::string dir = PAULISYNTH_GOLDEN_DIR;
  const std::pair<const char*, const char*> cases[] = {
      {"XZ", "xz_t0.7.qasm"},
      {"IYIYIX", "iyiyix_t0.7.qasm"},
      {"Z", "z_t0.7.qasm"}};
  bool ok = true;
  std::string detail;
  for (const auto& [label, file] : cases) {
    const QuantumCircuit c =
        exp_pauli_term(PauliTerm(1.0, PauliString::from_dense(label)), 0.7);
    const std::string a = emit_qasm(c).text;
    const std::string b = emit_qasm(c).text;
    const bool same = a == b && a == read_file(dir + "/" + file);
    const bool valid = !validate_qasm(a).has_value();
    ok &= same && valid;
    detail += std::string(detail.empty() ? "" : ", ") + label + " " +
              (same ? "byte-equal" : "DIFFERS") + (valid ? "" : " INVALID");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // seconds, 0 = none
  };
  const Criterion criteria[] = {
      {"1 exhaustive single-term correctness", exhaustive_correctness,
       kExhaustiveSeconds},
      {"2 randomized correctness n=4..8", random_correctness, kRandomSeconds},
      {"3 worked-example golden circuits", golden_circuits, 0},
      {"4 gate-count formulas", gate_count_formulas, 0},
      {"5 structural identities", structural_identities, 0},
      {"6 Trotter behaviour", trotter_behaviour, 0},
      {"7 parser round-trip and fuzz", parser_round_trip, 0},
      {"8 QASM determinism and golden files", qasm_golden, 0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool pass = outcome.pass;
    if (c.time_limit > 0 && seconds > c.time_limit) pass = false;
    failures += !pass;
    std::printf("[%s] %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str(), seconds,
                c.time_limit > 0
                    ? (", limit " + std::to_string(static_cast<int>(c.time_limit)) + " s").c_str()
                    : "");
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
