// Copyright 2026 The gadsim Authors
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

#include "gadsim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gadsim/qasm.hpp"
#include "gadsim/sweep.hpp"

namespace gadsim {

namespace {

std::string format_entry(const Complex& z) {
  std::string out = format_g12(z.real());
  if (z.imag() != 0.0) {
    out += (z.imag() < 0.0 ? "-" : "+") + format_g12(std::abs(z.imag())) +
           "i";
  }
  return out;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j == 0 ? " " : "  ") << format_entry(m(i, j));
    }
    out << " ]\n";
  }
}

PureState state_flag(const std::string& token, std::ostream& err) {
  double deviation = 0.0;
  PureState state = parse_state_token(token, &deviation);
  if (deviation > 1e-6) {
    err << "warning: input state norm off by " << format_g12(deviation)
        << "; normalized\n";
  }
  return state;
}

// `p=0.4` or `gamma=0.8`.
void parse_fixed_flag(const std::string& text, std::string& name,
                      double& value) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("--fixed expects name=value, e.g. p=0.5");
  }
  name = text.substr(0, eq);
  if (name != "p" && name != "gamma") {
    throw std::invalid_argument("--fixed parameter must be p or gamma");
  }
  try {
    std::size_t used = 0;
    const std::string value_str = text.substr(eq + 1);
    value = std::stod(value_str, &used);
    if (used != value_str.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--fixed expects a numeric value");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("--fixed value must lie in [0, 1]");
  }
}

int write_text(const std::string& text, const std::string& path,
               std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

struct ApplyOptions {
  double p = 0.5;
  double gamma = 0.5;
  std::string input = "0";
  std::string method = "closed";
};

int run_apply(const ApplyOptions& opt, std::ostream& out, std::ostream& err) {
  const GadParams params{opt.p, opt.gamma};
  const DensityOperator rho = pure_to_density(state_flag(opt.input, err));

  DensityOperator result = [&] {
    if (opt.method == "closed") return gad_closed_form(params, rho);
    if (opt.method == "kraus") return apply_channel(gad_kraus(params), rho);
    if (opt.method == "dilation") {
      return reduce(canonical_dilation(gad_kraus(params)), rho);
    }
    // "circuit"
    ComplexVector env(4);
    env[0] = 1.0;
    return simulate_channel(gad_simulator_circuit(params), rho, 0,
                            PureState(std::move(env)));
  }();

  out << "p=" << format_g12(opt.p) << " gamma=" << format_g12(opt.gamma)
      << " method=" << opt.method << "\n";
  print_matrix(out, result.matrix());
  return kExitOk;
}

struct SweepOptions {
  std::string vary;
  std::string fixed;
  std::string grid;
  std::string input = "0";
  std::string reference;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_sweep_cmd(const SweepOptions& opt, std::ostream& out,
                  std::ostream& err) {
  std::string fixed_name;
  double fixed_value = 0.0;
  parse_fixed_flag(opt.fixed, fixed_name, fixed_value);
  const bool vary_p = opt.vary == "p";
  if ((vary_p && fixed_name != "gamma") || (!vary_p && fixed_name != "p")) {
    throw std::invalid_argument(
        "--fixed must name the parameter that is not varied");
  }

  const PureState input = state_flag(opt.input, err);
  const PureState reference =
      opt.reference.empty() ? input : state_flag(opt.reference, err);

  const SweepSpec spec{vary_p ? SweepSpec::Vary::P : SweepSpec::Vary::Gamma,
                       parse_grid(opt.grid),
                       fixed_value,
                       input,
                       reference,
                       opt.shots,
                       opt.seed};
  const SweepResult result = run_sweep(spec);
  return write_text(to_csv(result), opt.out_path, out, err);
}

struct QasmOptions {
  double p = 0.5;
  double gamma = 0.5;
  bool measure = false;
  std::string out_path;
};

int run_qasm(const QasmOptions& opt, std::ostream& out, std::ostream& err) {
  const Circuit circuit = gad_simulator_circuit({opt.p, opt.gamma});
  std::set<std::size_t> measures;
  if (opt.measure) measures.insert(0);  // principal qubit Q
  const std::string text =
      emit(circuit, WireMapping::simulator_default(), measures);
  return write_text(text, opt.out_path, out, err);
}

struct VerifyOptions {
  std::size_t grid_steps = 11;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const EquivalenceReport report =
      four_way_equivalence(opt.grid_steps, opt.seed);
  out << "four-way equivalence over " << report.grid_points
      << " (p,gamma) points x " << report.inputs
      << " inputs: max residual = " << format_g12(report.max_residual)
      << "\n";
  if (report.max_residual > 1e-10) {
    out << "FAIL: residual above 1e-10\n";
    return kExitVerifyFailure;
  }
  out << "OK\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Thermal (generalized amplitude damping) qubit noise "
               "simulator"};
  app.require_subcommand(1);

  ApplyOptions apply_opt;
  CLI::App* apply = app.add_subcommand(
      "apply", "Apply the channel once and print the output density matrix");
  apply->add_option("--p", apply_opt.p, "Equilibrium probability p")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  apply->add_option("--gamma", apply_opt.gamma, "Coupling factor gamma")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  apply->add_option("--input", apply_opt.input,
                    "Input state: 0, 1, +, - or re:im,re:im");
  apply->add_option("--method", apply_opt.method,
                    "Representation: closed, kraus, dilation or circuit")
      ->check(CLI::IsMember({"closed", "kraus", "dilation", "circuit"}));

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep p or gamma and write probability curves as CSV");
  sweep->add_option("--vary", sweep_opt.vary, "Swept parameter: p or gamma")
      ->required()
      ->check(CLI::IsMember({"p", "gamma"}));
  sweep->add_option("--fixed", sweep_opt.fixed,
                    "Held parameter as name=value, e.g. p=0.5")
      ->required();
  sweep->add_option("--grid", sweep_opt.grid,
                    "Swept values as start:stop:step (inclusive)")
      ->required();
  sweep->add_option("--input", sweep_opt.input, "Input state");
  sweep->add_option("--reference", sweep_opt.reference,
                    "Measurement reference state (defaults to the input)");
  sweep->add_option("--shots", sweep_opt.shots,
                    "Shots per grid point (0 = exact only)");
  sweep->add_option("--seed", sweep_opt.seed, "Sampling seed");
  sweep->add_option("--out", sweep_opt.out_path,
                    "Output CSV path ('-' = stdout)");

  QasmOptions qasm_opt;
  CLI::App* qasm = app.add_subcommand(
      "qasm", "Emit the simulator circuit as OpenQASM 2.0");
  qasm->add_option("--p", qasm_opt.p, "Equilibrium probability p")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  qasm->add_option("--gamma", qasm_opt.gamma, "Coupling factor gamma")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  qasm->add_flag("--measure", qasm_opt.measure,
                 "Measure the principal qubit");
  qasm->add_option("--out", qasm_opt.out_path,
                   "Output path ('-' = stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Cross-validate Kraus, closed-form, dilation and circuit outputs");
  verify->add_option("--grid-steps", verify_opt.grid_steps,
                     "Grid resolution per parameter")
      ->check(CLI::Range(std::size_t{2}, std::size_t{101}));
  verify->add_option("--seed", verify_opt.seed,
                     "Seed for the random mixed input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here.
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (apply->parsed()) return run_apply(apply_opt, out, err);
    if (sweep->parsed()) return run_sweep_cmd(sweep_opt, out, err);
    if (qasm->parsed()) return run_qasm(qasm_opt, out, err);
    if (verify->parsed()) return run_verify(verify_opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace gadsim
