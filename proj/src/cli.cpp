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

#include "paulisynth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "paulisynth/errors.hpp"
#include "paulisynth/hamiltonian_parser.hpp"
#include "paulisynth/oracle.hpp"
#include "paulisynth/qasm.hpp"
#include "paulisynth/synthesis.hpp"

namespace paulisynth {
namespace {

struct CliConfig {
  std::string ham_text;
  std::string ham_file;
  unsigned n_qubits = 0;
  double t = 1.0;
  unsigned reps = 1;
  std::string variant = "z-ladder";
  bool compact = false;
  bool exact = false;
  std::string out_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App& cmd, CliConfig& cfg, bool t_required) {
  auto* ham = cmd.add_option("--ham", cfg.ham_text, "Hamiltonian expression");
  auto* file =
      cmd.add_option("--ham-file", cfg.ham_file, "File holding the Hamiltonian")
          ->check(CLI::ExistingFile);
  ham->excludes(file);
  file->excludes(ham);
  cmd.add_option("--n", cfg.n_qubits, "Number of qubits")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* t = cmd.add_option("--t", cfg.t, "Evolution time");
  if (t_required) t->required();
  cmd.add_option("--variant", cfg.variant, "Ladder construction")
      ->check(CLI::IsMember({"z-ladder", "x-ladder", "mixed"}));
  cmd.add_flag("--compact", cfg.compact, "Run the peephole cancellation pass");
}

void add_reps(CLI::App& cmd, CliConfig& cfg) {
  cmd.add_option("--reps", cfg.reps, "Trotter slices")
      ->check(CLI::PositiveNumber);
}

void add_out(CLI::App& cmd, CliConfig& cfg) {
  cmd.add_option("--out", cfg.out_path, "Write output here instead of stdout");
}

Hamiltonian load_hamiltonian(const CliConfig& cfg) {
  std::string text;
  if (!cfg.ham_file.empty()) {
    std::ifstream in(cfg.ham_file, std::ios::binary);
    if (!in) throw UsageError("cannot read " + cfg.ham_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (!cfg.ham_text.empty()) {
    text = cfg.ham_text;
  } else {
    throw UsageError("one of --ham or --ham-file is required");
  }
  return parse_hamiltonian(text, cfg.n_qubits);
}

QuantumCircuit build(const Hamiltonian& h, const CliConfig& cfg) {
  return trotter_circuit(h, EvolutionParams(cfg.t, cfg.reps),
                         *parse_variant(cfg.variant), cfg.compact);
}

void write_output(const std::string& text, const CliConfig& cfg,
                  std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << text;
}

// Product of per-term closed forms in circuit order.
oracle::UnitaryMatrix product_reference(const Hamiltonian& h, double t,
                                        unsigned reps) {
  const double slice = t / static_cast<double>(reps);
  const auto dim = Eigen::Index{1} << h.n_qubits();
  oracle::UnitaryMatrix u = oracle::UnitaryMatrix::Identity(dim, dim);
  for (unsigned r = 0; r < reps; ++r) {
    for (const PauliTerm& term : h.terms()) {
      u = oracle::exp_pauli_closed_form(term.string(),
                                        slice * term.coefficient()) *
          u;
    }
  }
  return u;
}

int verify(const Hamiltonian& h, const CliConfig& cfg, std::ostream& out) {
  const unsigned cap =
      cfg.exact ? oracle::kMaxExponentialQubits : oracle::kMaxDenseQubits;
  if (h.n_qubits() > cap) throw OracleSizeError(h.n_qubits(), cap);
  const QuantumCircuit c = build(h, cfg);
  const oracle::UnitaryMatrix actual = oracle::circuit_unitary(c);
  const oracle::UnitaryMatrix reference =
      cfg.exact ? oracle::matrix_exponential(oracle::hamiltonian_matrix(h),
                                             cfg.t)
                : product_reference(h, cfg.t, cfg.reps);
  const double d = oracle::phase_invariant_distance(actual, reference);
  const bool pass = d <= kVerifyThreshold;
  char line[128];
  std::snprintf(line, sizeof line, "distance=%.6e threshold=%.1e %s\n", d,
                kVerifyThreshold, pass ? "PASS" : "FAIL");
  out << line;
  return pass ? kExitOk : kExitVerifyFailed;
}

std::string stats_text(const QuantumCircuit& c) {
  static constexpr GateKind kOrder[] = {GateKind::CX, GateKind::CZ,
                                        GateKind::RZ, GateKind::RX,
                                        GateKind::H,  GateKind::S,
                                        GateKind::Sdg};
  const GateCounts counts = gate_counts(c);
  std::string text;
  for (GateKind kind : kOrder) {
    if (counts[kind] == 0) continue;
    text += std::string(gate_name(kind)) + "=" +
            std::to_string(counts[kind]) + "\n";
  }
  return text;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pauli-exponential circuit synthesis", "paulisynth"};
  app.require_subcommand(1);

  CliConfig cfg;
  auto* synth = app.add_subcommand("synth", "Emit QASM for one time slice");
  add_common(*synth, cfg, true);
  add_out(*synth, cfg);

  auto* trotter = app.add_subcommand("trotter", "Emit a Trotterized circuit");
  add_common(*trotter, cfg, true);
  add_reps(*trotter, cfg);
  add_out(*trotter, cfg);

  auto* verify_cmd =
      app.add_subcommand("verify", "Check a synthesized circuit numerically");
  add_common(*verify_cmd, cfg, true);
  add_reps(*verify_cmd, cfg);
  verify_cmd->add_flag("--exact", cfg.exact,
                       "Compare against exp(-i t H) instead of the product "
                       "of term exponentials");

  auto* stats = app.add_subcommand("stats", "Print gate counts");
  add_common(*stats, cfg, false);
  add_reps(*stats, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Hamiltonian h = load_hamiltonian(cfg);
    if (synth->parsed()) {
      cfg.reps = 1;
      write_output(emit_qasm(build(h, cfg)).text, cfg, out);
      return kExitOk;
    }
    if (trotter->parsed()) {
      write_output(emit_qasm(build(h, cfg)).text, cfg, out);
      return kExitOk;
    }
    if (stats->parsed()) {
      out << stats_text(build(h, cfg));
      return kExitOk;
    }
    return verify(h, cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what()
        << "; verification needs a dense 2^n x 2^n matrix\n";
    return kExitOracleTooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace paulisynth
