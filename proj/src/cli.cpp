#include "qacc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qacc/errors.hpp"
#include "qacc/modes.hpp"
#include "qacc/response.hpp"
#include "qacc/specfun.hpp"

#ifndef QACC_VERSION
#define QACC_VERSION "0.0.0"
#endif

namespace qacc::cli {

namespace {

// Keys accepted both as --flags and in config files, in metadata order.
const std::vector<std::string> kKeys = {"a",      "L",    "m",     "omega",    "n1",
                                        "kmax",   "tol",  "panel", "scenario", "norm",
                                        "mode",   "grid", "p",     "samples",  "threads",
                                        "out"};

const std::map<std::string, std::string> kKeyHelp = {
    {"a", "acceleration a (> 0)"},
    {"L", "cavity length L (default 1)"},
    {"m", "field mass m (default 0, or the panel's mass)"},
    {"omega", "detector gap; default: lowest static-cavity frequency"},
    {"n1", "quanta in the lowest mode (default 0)"},
    {"kmax", "mode truncation (default 15)"},
    {"tol", "quadrature tolerance (default 1e-6)"},
    {"panel", "panel preset: a | b | c"},
    {"scenario", "rob (accelerated detector) | bob (inertial detector)"},
    {"norm", "static-cavity normalisation: paper | kg"},
    {"mode", "vacuum | stimulated | full"},
    {"grid", "acceleration grid lo:hi:n:log|lin"},
    {"p", "measured click probability (distinguish)"},
    {"samples", "sample points per mode profile (modes, default 11)"},
    {"threads", "worker threads for sweeps (0 = all cores)"},
    {"out", "output file (default stdout)"},
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + key + ": expected a number, got '" + text + "'");
}

long to_integer(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e15) {
    throw UsageError("--" + key + ": expected an integer, got '" + text + "'");
  }
  return static_cast<long>(v);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Command parse_command(const std::string& text) {
  if (text == "modes") return Command::Modes;
  if (text == "probability") return Command::Probability;
  if (text == "sweep") return Command::Sweep;
  if (text == "distinguish") return Command::Distinguish;
  if (text == "validate") return Command::Validate;
  if (text == "validate-specfun") return Command::ValidateSpecfun;
  throw UsageError("unknown command '" + text + "'");
}

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

void write_metadata(std::ostream& os, const RunConfig& config) {
  os << "# qacc " << version() << '\n';
  for (const auto& [key, value] : config.keys) os << "# " << key << " = " << value << '\n';
}

experiments::SweepConfig sweep_config(const RunConfig& config) {
  experiments::SweepConfig sc;
  sc.length = config.physical.length;
  sc.mass = config.physical.mass;
  sc.gap = config.physical.gap;
  sc.occupation = config.physical.occupation;
  sc.k_max = config.k_max;
  sc.tol = config.tol;
  sc.normalization = config.normalization;
  return sc;
}

experiments::SweepMode sweep_mode(const RunConfig& config) {
  return config.mode == "stimulated" ? experiments::SweepMode::StimulatedPerPhoton
                                     : experiments::SweepMode::Vacuum;
}

/// Acceleration bracket for `distinguish`: --grid, else ±10 % around --a.
experiments::AccelerationGrid distinguish_bracket(const RunConfig& config) {
  if (config.grid) return *config.grid;
  const double L = config.physical.length;
  const double a = config.physical.acceleration;
  experiments::AccelerationGrid grid;
  grid.lo = std::max(0.9 * a, 0.02 / L);
  grid.hi = std::min(1.1 * a, 1.999 / L);
  grid.points = 21;
  grid.logarithmic = true;
  return grid;
}

int run_modes(const RunConfig& config, std::ostream& os) {
  const int samples = std::max(2, config.samples);
  write_metadata(os, config);
  if (config.scenario.value_or(Scenario::InertialDetectorAcceleratedCavity) ==
      Scenario::AcceleratedDetector) {
    const modes::InertialModeSet set(config.physical, config.k_max, config.normalization);
    const double half = 0.5 * config.physical.length;
    std::vector<double> xs;
    for (int i = 0; i < samples; ++i) xs.push_back(-half + 2.0 * half * i / (samples - 1));
    os << "k,omega_k,N_k";
    for (double x : xs) os << ",F(x=" << format_double(x) << ")";
    os << '\n';
    for (int k = 1; k <= set.k_max(); ++k) {
      const double n_k = config.normalization == Normalization::Massless
                             ? 1.0 / std::sqrt(k * std::numbers::pi)
                             : 1.0 / std::sqrt(set.frequency(k) * config.physical.length);
      os << k << ',' << format_double(set.frequency(k)) << ',' << format_double(n_k);
      for (double x : xs) os << ',' << format_double(set(k, x));
      os << '\n';
    }
    return kSuccess;
  }
  const modes::RindlerModeSet set(config.physical, config.k_max);
  const auto& walls = set.walls();
  std::vector<double> chis;
  for (int i = 0; i < samples; ++i) {
    chis.push_back(walls.near + (walls.far - walls.near) * i / (samples - 1));
  }
  os << "# chi_far = " << format_double(walls.far) << ", chi_near = " << format_double(walls.near)
     << '\n';
  os << "# N_k normalises the gamma-scaled bracket |Gamma(1+i nu_k)|^2 B_k"
     << (set.conformal() ? " (conformal sine modes below the mass threshold)" : "") << '\n';
  os << "k,nu_k,Omega_k,N_k";
  for (double chi : chis) os << ",F(chi=" << format_double(chi) << ")";
  os << '\n';
  for (int k = 1; k <= set.k_max(); ++k) {
    os << k << ',' << format_double(set.order(k)) << ',' << format_double(set.frequency(k)) << ','
       << format_double(set.normalization(k));
    for (double chi : chis) os << ',' << format_double(set(k, chi));
    os << '\n';
  }
  return kSuccess;
}

int run_probability(const RunConfig& config, std::ostream& os) {
  const Scenario scenario = config.scenario.value_or(Scenario::AcceleratedDetector);
  response::ResponseOptions options;
  options.normalization = config.normalization;
  const bool stimulated = config.mode == "stimulated";
  PhysicalParams params = config.physical;
  if (config.mode == "vacuum") params.occupation = 0;
  const auto result =
      stimulated ? response::stimulated_only_probability(scenario, params, config.tol, options)
                 : response::transition_probability(scenario, params, config.k_max, config.tol,
                                                    options);
  write_metadata(os, config);
  os << "# coupling constant set to 1; probabilities in arbitrary units\n";
  os << "scenario,a,L,m,omega,n1,mode,k_max";
  for (int k = 1; k <= result.k_max; ++k) os << ",vacuum_" << k;
  os << ",stimulated_corotating,stimulated_counterrotating,total,tail_estimate\n";
  os << to_string(scenario) << ',' << format_double(params.acceleration) << ','
     << format_double(params.length) << ',' << format_double(params.mass) << ','
     << format_double(params.gap) << ',' << params.occupation << ','
     << (stimulated ? "stimulated_per_photon" : (params.occupation == 0 ? "vacuum" : "full"))
     << ',' << result.k_max;
  for (double v : result.vacuum_terms) os << ',' << format_double(v);
  os << ',' << format_double(result.stimulated_corotating) << ','
     << format_double(result.stimulated_counterrotating) << ',' << format_double(result.total)
     << ',' << format_double(result.tail_estimate) << '\n';
  return kSuccess;
}

void write_plot_script(const std::filesystem::path& path) {
  std::ofstream script(path);
  script << R"PY(#!/usr/bin/env python3
"""Plot click probability against acceleration from qacc sweep CSVs.

Usage: plot_sweep.py [panel_a.csv panel_b.csv panel_c.csv] [-o figure.png]
Solid line: accelerated detector in a static cavity. Dashed line: inertial
detector in an accelerated cavity.
"""
import csv
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    meta, rows = {}, []
    with open(path) as fh:
        lines = []
        for line in fh:
            if line.startswith("#"):
                if "=" in line:
                    key, value = line[1:].split("=", 1)
                    meta[key.strip()] = value.strip()
            else:
                lines.append(line)
    for row in csv.DictReader(lines):
        rows.append(row)
    return meta, rows


def main(argv):
    out = "sweep.png"
    if "-o" in argv:
        i = argv.index("-o")
        out = argv[i + 1]
        argv = argv[:i] + argv[i + 2:]
    here = os.path.dirname(os.path.abspath(__file__))
    paths = argv or [os.path.join(here, "panel_%s.csv" % p) for p in "abc"]
    paths = [p for p in paths if os.path.exists(p)]
    if not paths:
        sys.exit("no sweep CSV files found")
    fig, axes = plt.subplots(1, len(paths), figsize=(4.5 * len(paths), 3.6), squeeze=False)
    for ax, path in zip(axes[0], paths):
        meta, rows = load(path)
        a = [float(r["a"]) for r in rows]
        ax.plot(a, [float(r["p_rob"]) for r in rows], "-", label="accelerated detector")
        ax.plot(a, [float(r["p_bob"]) for r in rows], "--", label="inertial detector")
        ax.set_xlabel("acceleration a")
        ax.set_ylabel("click probability (arb. units)")
        ax.set_title("m = %s, %s" % (meta.get("m", "?"), meta.get("mode", "?")))
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print("wrote", out)


if __name__ == "__main__":
    main(sys.argv[1:])
)PY";
}

int run_sweep(const RunConfig& config, std::ostream& os, std::ostream& err) {
  const auto grid =
      config.grid.value_or(experiments::AccelerationGrid::default_for(config.physical.length));
  const auto table = experiments::sweep(sweep_config(config), grid, sweep_mode(config),
                                        Scenario::AcceleratedDetector,
                                        Scenario::InertialDetectorAcceleratedCavity,
                                        config.threads);
  write_metadata(os, config);
  os << "# coupling constant set to 1; probabilities in arbitrary units\n";
  os << "a,p_rob,p_bob,ratio,rob_tail,bob_tail,flags\n";
  for (const auto& row : table.rows) {
    std::string flags;
    for (const auto& f : row.flags) flags += (flags.empty() ? "" : ";") + csv_safe(f);
    os << format_double(row.a) << ',' << format_double(row.p_rob) << ','
       << format_double(row.p_bob) << ',' << format_double(row.ratio) << ','
       << format_double(row.rob_tail) << ',' << format_double(row.bob_tail) << ',' << flags
       << '\n';
  }
  if (!config.output_path.empty()) {
    const auto script = std::filesystem::path(config.output_path).parent_path() / "plot_sweep.py";
    write_plot_script(script);
    err << "wrote plot script " << script.string() << '\n';
  }
  return kSuccess;
}

int run_distinguish(const RunConfig& config, std::ostream& os) {
  if (!config.p_measured) throw UsageError("distinguish needs --p");
  const auto bracket = distinguish_bracket(config);
  const auto result = experiments::discriminate_frame(
      *config.p_measured, sweep_config(config), sweep_mode(config), bracket.lo, bracket.hi,
      bracket.points);
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : " ") + format_double(x);
    return s.empty() ? std::string("none") : s;
  };
  write_metadata(os, config);
  os << "frame: " << experiments::to_string(result.frame) << '\n';
  os << "p_measured: " << format_double(*config.p_measured) << '\n';
  os << "bracket: " << format_double(bracket.lo) << ' ' << format_double(bracket.hi) << '\n';
  os << "rob_candidates: " << list(result.rob_candidates) << '\n';
  os << "bob_candidates: " << list(result.bob_candidates) << '\n';
  return kSuccess;
}

int run_validate_specfun(const RunConfig& config, std::ostream& os) {
  write_metadata(os, config);
  os << "nu,z,re,im,ref_re,ref_im,rel_err\n";
  for (const auto& ref : specfun::bessel_reference_table()) {
    const auto v = specfun::bessel_i_imag_order(ref.nu, ref.z);
    const std::complex<double> expected(ref.re, ref.im);
    os << format_double(ref.nu) << ',' << format_double(ref.z) << ',' << format_double(v.real())
       << ',' << format_double(v.imag()) << ',' << format_double(ref.re) << ','
       << format_double(ref.im) << ',' << format_double(std::abs(v - expected) / std::abs(expected))
       << '\n';
  }
  return kSuccess;
}

int run_validate(const RunConfig& config, std::ostream& os) {
  bool all = true;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    all = all && ok;
    os << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  };
  write_metadata(os, config);

  double worst = 0.0;
  for (const auto& ref : specfun::bessel_reference_table()) {
    const auto v = specfun::bessel_i_imag_order(ref.nu, ref.z);
    const std::complex<double> expected(ref.re, ref.im);
    worst = std::max(worst, std::abs(v - expected) / std::abs(expected));
  }
  report(worst <= 1e-10, "specfun-oracle", "max relative error " + format_double(worst) +
                                               " (bound 1e-10, 49 points)");

  for (auto [a, m] : {std::pair{0.5, 0.2}, std::pair{1.0, 2.0}}) {
    const PhysicalParams p{1.0, m, 1.0, 0, a};
    const modes::RindlerModeSet set(p, config.k_max);
    double gram = 0.0;
    for (int j = 1; j <= set.k_max(); ++j) {
      for (int k = j; k <= set.k_max(); ++k) {
        gram = std::max(gram, std::abs(modes::kg_inner_product(set, j, k) - (j == k ? 1.0 : 0.0)));
      }
    }
    report(gram <= 1e-6, "orthonormality(a=" + format_double(a) + ",m=" + format_double(m) + ")",
           "max |G - I| " + format_double(gram) + " (bound 1e-6, k_max " +
               std::to_string(config.k_max) + ")");
  }

  const experiments::AccelerationGrid grid{0.05, 0.3, 8, true};
  const auto conformal = experiments::conformal_check(grid, 0.01);
  report(conformal.max_deviation < 0.02, "conformal-limit(m=0.01)",
         "max Rob/Bob deviation for a*L in [0.05, 0.3]: " +
             format_double(conformal.max_deviation) + " (bound 0.02)");

  os << (all ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  return all ? kSuccess : kCheckFailed;
}

}  // namespace

std::string_view version() { return QACC_VERSION; }

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Modes:
      return "modes";
    case Command::Probability:
      return "probability";
    case Command::Sweep:
      return "sweep";
    case Command::Distinguish:
      return "distinguish";
    case Command::Validate:
      return "validate";
    case Command::ValidateSpecfun:
      break;
  }
  return "validate-specfun";
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> values;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw UsageError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

ParseResult parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Unruh-DeWitt detector click probabilities for an accelerated detector in a "
               "static cavity and an inertial detector in an accelerated cavity."};
  app.name("qacc");
  std::string command;
  std::string config_path;
  app.add_option("command", command,
                 "modes | probability | sweep | distinguish | validate | validate-specfun");
  app.add_option("--config", config_path, "key = value configuration file");
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  for (const auto& key : kKeys) {
    flag_options[key] = app.add_option("--" + key, flag_values[key], kKeyHelp.at(key));
  }

  if (args.empty()) return {std::nullopt, app.help(), kUsage};

  std::vector<const char*> argv{"qacc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, app.help(), kSuccess};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (command.empty()) throw UsageError("missing command");

  std::map<std::string, std::string> values;
  if (!config_path.empty()) values = read_config_file(config_path);
  for (const auto& key : kKeys) {
    if (flag_options[key]->count() > 0) values[key] = flag_values[key];
  }
  auto has = [&](const std::string& key) { return values.count(key) > 0; };

  RunConfig config;
  config.command = parse_command(command);
  if (has("panel")) {
    config.panel = experiments::parse_panel(values["panel"]);
    const auto preset = experiments::panel_config(*config.panel);
    config.physical.length = preset.length;
    config.physical.mass = preset.mass;
    config.physical.occupation = preset.occupation;
    config.mode = experiments::panel_mode(*config.panel) == experiments::SweepMode::Vacuum
                      ? "vacuum"
                      : "stimulated";
  }
  if (has("L")) config.physical.length = to_double("L", values["L"]);
  if (has("m")) config.physical.mass = to_double("m", values["m"]);
  if (has("n1")) config.physical.occupation = to_integer("n1", values["n1"]);
  if (has("a")) {
    config.physical.acceleration = to_double("a", values["a"]);
    config.acceleration_given = true;
  }
  if (has("kmax")) config.k_max = static_cast<int>(to_integer("kmax", values["kmax"]));
  if (has("tol")) config.tol = to_double("tol", values["tol"]);
  if (has("scenario")) config.scenario = parse_scenario(values["scenario"]);
  if (has("norm")) config.normalization = parse_normalization(values["norm"]);
  if (has("mode")) {
    config.mode = values["mode"];
    if (config.mode != "vacuum" && config.mode != "stimulated" && config.mode != "full") {
      throw UsageError("--mode must be vacuum, stimulated or full");
    }
  }
  if (has("grid")) config.grid = experiments::AccelerationGrid::parse(values["grid"]);
  if (has("p")) config.p_measured = to_double("p", values["p"]);
  if (has("samples")) config.samples = static_cast<int>(to_integer("samples", values["samples"]));
  if (has("threads")) {
    config.threads = static_cast<unsigned>(std::max(0L, to_integer("threads", values["threads"])));
  }
  if (has("out")) config.output_path = values["out"];
  if (config.k_max < 1) throw UsageError("--kmax must be >= 1");
  if (!(config.tol > 0.0)) throw UsageError("--tol must be > 0");

  if (has("omega")) {
    config.physical.gap = to_double("omega", values["omega"]);
  } else if (config.physical.length > 0.0 && config.physical.mass >= 0.0) {
    config.physical.gap = modes::inertial_frequency(1, config.physical);
  }

  const bool needs_a = config.command == Command::Modes ||
                       config.command == Command::Probability ||
                       (config.command == Command::Distinguish && !config.grid);
  if (needs_a && !config.acceleration_given) {
    throw UsageError(std::string(to_string(config.command)) + " needs --a");
  }

  auto& keys = config.keys;
  keys.emplace_back("command", std::string(to_string(config.command)));
  if (config.acceleration_given) keys.emplace_back("a", format_double(config.physical.acceleration));
  keys.emplace_back("L", format_double(config.physical.length));
  keys.emplace_back("m", format_double(config.physical.mass));
  keys.emplace_back("omega", format_double(config.physical.gap));
  keys.emplace_back("n1", std::to_string(config.physical.occupation));
  keys.emplace_back("kmax", std::to_string(config.k_max));
  keys.emplace_back("tol", format_double(config.tol));
  keys.emplace_back("norm", std::string(to_string(config.normalization)));
  if (config.panel) keys.emplace_back("panel", values["panel"]);
  if (config.scenario) keys.emplace_back("scenario", std::string(to_string(*config.scenario)));
  if (!config.mode.empty()) keys.emplace_back("mode", config.mode);
  if (config.grid) keys.emplace_back("grid", values["grid"]);
  if (config.p_measured) keys.emplace_back("p", format_double(*config.p_measured));
  return {config, {}, kSuccess};
}

void check_domain(const RunConfig& config) {
  config.physical.validate();
  const bool accelerated_cavity =
      config.command == Command::Sweep || config.command == Command::Distinguish ||
      (config.command == Command::Modes &&
       config.scenario.value_or(Scenario::InertialDetectorAcceleratedCavity) ==
           Scenario::InertialDetectorAcceleratedCavity) ||
      (config.command == Command::Probability &&
       config.scenario == Scenario::InertialDetectorAcceleratedCavity);
  if (accelerated_cavity && config.acceleration_given) {
    config.physical.validate_accelerated_cavity();
  }
  if ((config.command == Command::Probability || config.command == Command::Modes) &&
      !(config.physical.acceleration > 0.0)) {
    throw DomainError("acceleration a must be > 0");
  }
  if (config.grid &&
      (config.command == Command::Sweep || config.command == Command::Distinguish)) {
    config.grid->values(config.physical.length);
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  check_domain(config);
  std::ofstream file;
  if (!config.output_path.empty()) {
    const auto parent = std::filesystem::path(config.output_path).parent_path();
    std::error_code ec;
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    file.open(config.output_path);
    if (!file) throw std::runtime_error("cannot write '" + config.output_path + "'");
  }
  std::ostringstream buffer;
  std::ostream& os = config.output_path.empty() ? out : static_cast<std::ostream&>(buffer);
  int status = kSuccess;
  switch (config.command) {
    case Command::Modes:
      status = run_modes(config, os);
      break;
    case Command::Probability:
      status = run_probability(config, os);
      break;
    case Command::Sweep:
      status = run_sweep(config, os, err);
      break;
    case Command::Distinguish:
      status = run_distinguish(config, os);
      break;
    case Command::Validate:
      status = run_validate(config, os);
      break;
    case Command::ValidateSpecfun:
      status = run_validate_specfun(config, os);
      break;
  }
  if (file.is_open()) file << buffer.str();
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const ParseResult parsed = parse_config(args);
    if (!parsed.config) {
      (parsed.exit_code == kSuccess ? out : err) << parsed.message;
      return parsed.exit_code;
    }
    return run(*parsed.config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'qacc --help' for the list of options\n";
    return kUsage;
  } catch (const HorizonError& e) {
    err << "horizon error: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace qacc::cli
