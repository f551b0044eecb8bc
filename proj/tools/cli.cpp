// Copyright 2026 The qgd Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "qgd/compiler.hpp"
#include "qgd/entangler.hpp"
#include "qgd/equivalence.hpp"
#include "qgd/hamiltonian.hpp"
#include "qgd/json_io.hpp"
#include "qgd/pulses.hpp"

namespace qgd::cli {

namespace {

using io::Json;

struct CliConfig {
  double tol = 1e-9;
  double step = 0.01;
  std::string format;
  std::uint64_t seed = KakOptions{}.seed;
};

struct Inputs {
  std::string gate;
  std::string input;
  std::string coupling;
  std::string prefer = "auto";
  std::string mode = "exact";
  int refocus_qubit = 1;
  bool force_general = false;
  std::size_t samples = 0;
  std::vector<double> ratios{1e-1, 1e-2, 1e-3};
  double horizon = kPi / 8.0;
};

// Rounds away representation noise so exact values print exactly.
double clean(double v) {
  if (std::abs(v) < 1e-13) return 0.0;
  const double r = std::round(v);
  return std::abs(v - r) < 1e-13 ? r : v;
}

Mat4 matrix_input(const Inputs &in) {
  if (!in.gate.empty() && !in.input.empty())
    throw Error(ErrorCode::InvalidArgument, "give either --gate or --input, not both");
  if (!in.gate.empty()) return named_gate(in.gate);
  if (in.input.empty()) throw Error(ErrorCode::InvalidArgument, "--gate or --input is required");
  return io::mat4_from_json(io::read_file(in.input));
}

RotFrameParams params_for(const Inputs &in, const Json &primary) {
  if (!in.coupling.empty()) return io::params_from_json(io::read_file(in.coupling));
  if (primary.is_object() && primary.contains("params"))
    return io::params_from_json(primary.at("params"));
  throw Error(ErrorCode::InvalidArgument,
              "couplings are required: pass --coupling or a compile result as --input");
}

std::string require_json(const CliConfig &cfg, const char *command) {
  if (!cfg.format.empty() && cfg.format != "json")
    throw Error(ErrorCode::InvalidArgument,
                std::string(command) + " only supports --format json");
  return "json";
}

Json number(double v) {
  const double c = clean(v);
  if (c == std::round(c) && std::abs(c) < 1e15) return static_cast<long long>(c);
  return c;
}

int cmd_invariants(const Inputs &in, const CliConfig &cfg, std::ostream &out) {
  require_json(cfg, "invariants");
  const auto inv = makhlin_invariants(matrix_input(in));
  const Json j = {{"G1", {number(inv.g1.real()), number(inv.g1.imag())}}, {"G2", number(inv.g2)}};
  out << j.dump() << '\n';
  return kOk;
}

int cmd_kak(const Inputs &in, const CliConfig &cfg, std::ostream &out) {
  require_json(cfg, "kak");
  const Mat4 u = matrix_input(in);
  KakOptions opts;
  opts.seed = cfg.seed;
  const auto kak = kak_decompose(u, opts);
  const auto weyl = weyl_canonicalize(kak.coords);
  Json j = io::to_json(kak);
  j["weyl_coords"] = {weyl.x, weyl.y, weyl.z};
  j["reconstruction_error"] = distance(kak.reconstruct(), u, false);
  out << j.dump() << '\n';
  return kOk;
}

int cmd_compile(const Inputs &in, const CliConfig &cfg, std::ostream &out) {
  require_json(cfg, "compile");
  if (in.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required");
  const RotFrameParams p = io::params_from_json(io::read_file(in.input));
  CompileOptions opts;
  opts.prefer = prefer_from_string(in.prefer);
  opts.refocus_qubit = in.refocus_qubit;
  opts.force_general = in.force_general;
  opts.tol = cfg.tol;
  out << io::to_json(compile_cnot(p, opts)).dump() << '\n';
  return kOk;
}

int cmd_simulate(const Inputs &in, const CliConfig &cfg, std::ostream &out) {
  require_json(cfg, "simulate");
  if (in.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required");
  const Json doc = io::read_file(in.input);
  const PulseSchedule schedule = io::schedule_from_json(doc);
  const RotFrameParams p = params_for(in, doc);

  std::string target = in.gate;
  if (target.empty() && doc.is_object() && doc.contains("target") && doc.at("target").is_string())
    target = doc.at("target").get<std::string>();

  const Mat4 u = simulate_schedule(schedule, p);
  Json j = {{"unitary", io::to_json(u)}, {"entangling_time", schedule.total_entangling_time()}};
  if (target.empty()) {
    out << j.dump() << '\n';
    return kOk;
  }
  const auto report =
      verify_schedule(schedule, p, named_gate(target), verify_mode_from_string(in.mode), target,
                      cfg.tol);
  j["verification"] = io::to_json(report);
  out << j.dump() << '\n';
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_trajectory(const Inputs &in, const CliConfig &cfg, std::ostream &out) {
  if (in.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required");
  const Json doc = io::read_file(in.input);
  const auto traj = trajectory(params_for(in, doc), io::schedule_from_json(doc), in.samples);
  if (cfg.format.empty() || cfg.format == "csv") {
    out << trajectory_csv(traj);
    return kOk;
  }
  Json rows = Json::array();
  for (const auto &s : traj)
    rows.push_back({{"t", s.t},
                    {"raw", {s.raw.x, s.raw.y, s.raw.z}},
                    {"wrapped", {s.wrapped.x, s.wrapped.y, s.wrapped.z}}});
  out << rows.dump() << '\n';
  return kOk;
}

int cmd_rwa_scan(const Inputs &in, const CliConfig &cfg, std::ostream &out) {
  const CouplingTensor ct = in.input.empty() ? CouplingTensor::diagonal(1.0, 0.0, 0.0)
                                             : io::coupling_from_json(io::read_file(in.input));
  double g = 0.0;
  for (const auto &row : ct.entries)
    for (double v : row) g = std::max(g, std::abs(v));
  if (g == 0.0) throw Error(ErrorCode::ZeroCoupling, "rwa-scan needs a nonzero coupling");
  for (double r : in.ratios)
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "ratios must be > 0");

  RwaOptions opts;
  opts.propagate.norm_step = cfg.step;
  const double T = in.horizon / g;
  std::vector<std::future<double>> jobs;
  for (double r : in.ratios)
    jobs.push_back(std::async(std::launch::async,
                              [&, r] { return rwa_infidelity(ct, g / r, T, opts); }));

  const bool csv = cfg.format.empty() || cfg.format == "csv";
  std::ostringstream csv_out;
  csv_out << "ratio,epsilon,T,infidelity\n";
  csv_out.precision(12);
  Json rows = Json::array();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const double r = in.ratios[k];
    const double value = jobs[k].get();
    csv_out << r << ',' << g / r << ',' << T << ',' << value << '\n';
    rows.push_back({{"ratio", r}, {"epsilon", g / r}, {"T", T}, {"infidelity", value}});
  }
  if (csv)
    out << csv_out.str();
  else
    out << rows.dump() << '\n';
  return kOk;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnitary: return kNotUnitary;
    case ErrorCode::ZeroCoupling: return kZeroCoupling;
    case ErrorCode::NonzeroJPrime: return kNonzeroJPrime;
    case ErrorCode::NonHermitianInput: return kNonHermitian;
    case ErrorCode::UnsupportedOp: return kUnsupportedOp;
    case ErrorCode::StepTooCoarse: return kStepTooCoarse;
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownGate: return kUsage;
  }
  return kInternal;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CliConfig cfg;
  if (const char *env = std::getenv("QGD_TOL")) {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      err << "error: QGD_TOL must be a positive number\n";
      return kUsage;
    }
    cfg.tol = v;
  }

  Inputs in;
  CLI::App app{"Two-qubit gate design: invariants, KAK, CNOT pulse synthesis", "qgd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", cfg.tol, "Verification tolerance (default 1e-9 or $QGD_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--step", cfg.step, "Integrator step as a fraction of 1/|H|")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized tie-breaking");

  auto add_matrix_flags = [&](CLI::App *sub) {
    sub->add_option("--gate", in.gate, "Named gate: I, CNOT, CZ, SWAP, SWAP_CNOT, CNOT_SWAP, Ctheta(t)");
    sub->add_option("--input", in.input, "JSON file with a 4x4 matrix of [re, im] pairs");
  };

  auto *invariants = app.add_subcommand("invariants", "Makhlin invariants of a gate");
  add_matrix_flags(invariants);

  auto *kak = app.add_subcommand("kak", "KAK decomposition of a gate");
  add_matrix_flags(kak);

  auto *compile = app.add_subcommand("compile", "Compile a CNOT pulse schedule");
  compile->add_option("--input", in.input, "Coupling tensor or {J, Jzz, Jprime} JSON")->required();
  compile->add_option("--prefer", in.prefer, "Target preference")
      ->check(CLI::IsMember({"auto", "cnot", "swap_cnot"}));
  compile->add_option("--refocus-qubit", in.refocus_qubit, "Qubit for refocusing pulses")
      ->check(CLI::Range(1, 2));
  compile->add_flag("--force-general", in.force_general,
                    "Use the general construction even when J' = 0");

  auto *simulate = app.add_subcommand("simulate", "Simulate and verify a pulse schedule");
  simulate->add_option("--input", in.input, "Schedule JSON or compile output")->required();
  simulate->add_option("--coupling", in.coupling, "Coupling JSON (overrides embedded params)");
  simulate->add_option("--gate", in.gate, "Target gate for verification");
  simulate->add_option("--mode", in.mode, "Verification mode")
      ->check(CLI::IsMember({"exact", "exact_up_to_phase", "local_class"}));

  auto *traj = app.add_subcommand("trajectory", "Entangler-space trajectory of a schedule");
  traj->add_option("--input", in.input, "Schedule JSON or compile output")->required();
  traj->add_option("--coupling", in.coupling, "Coupling JSON (overrides embedded params)");
  traj->add_option("--samples", in.samples, "Uniform samples (0: interval boundaries)");

  auto *scan = app.add_subcommand("rwa-scan", "Rotating-wave error versus g/eps");
  scan->add_option("--input", in.input, "Coupling tensor JSON (default: XX coupling, g = 1)");
  scan->add_option("--ratios", in.ratios, "Comma-separated g/eps values")->delimiter(',');
  scan->add_option("--horizon", in.horizon, "Evolution time in units of 1/g")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    check_conventions();
    if (invariants->parsed()) return cmd_invariants(in, cfg, out);
    if (kak->parsed()) return cmd_kak(in, cfg, out);
    if (compile->parsed()) return cmd_compile(in, cfg, out);
    if (simulate->parsed()) return cmd_simulate(in, cfg, out);
    if (traj->parsed()) return cmd_trajectory(in, cfg, out);
    if (scan->parsed()) return cmd_rwa_scan(in, cfg, out);
  } catch (const Error &e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace qgd::cli
