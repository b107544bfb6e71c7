// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// spikebit - run, verify and export streaming spiking arithmetic circuits.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration
// error. Relative output paths honour SPIKEBIT_OUT_DIR.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spikebit/netlist_io.hpp"
#include "spikebit/spikebit.hpp"

namespace {

using namespace spikebit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string out_path(const std::string& path) {
  const char* dir = std::getenv("SPIKEBIT_OUT_DIR");
  if (!dir || !*dir || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

std::vector<int> parse_widths(const std::string& spec) {
  std::vector<int> widths;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    const std::string part = spec.substr(pos, next - pos);
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      widths.push_back(std::stoi(part));
    } else {
      const int lo = std::stoi(part.substr(0, dots));
      const int hi = std::stoi(part.substr(dots + 2));
      for (int k = lo; k <= hi; ++k) widths.push_back(k);
    }
    pos = next + 1;
  }
  if (widths.empty()) throw std::invalid_argument("empty width spec");
  return widths;
}

struct RunOptions {
  std::string circuit;
  int width = 4;
  std::int64_t a = 0, b = 0, x = 0, y = 0, scalar = 1;
  int select = 0;
  std::string variant = "arithmetic";
  std::string leak = "additive";
  std::string mode = "max";
  bool raw = false;
  std::string raster_file;
};

CircuitPlan build_plan(const RunOptions& o,
                       std::map<std::string, std::int64_t>& values) {
  if (o.circuit == "adder") {
    values = {{"A", o.a}, {"B", o.b}};
    return make_adder(o.width);
  }
  if (o.circuit == "not") {
    values = {{"X", o.x}};
    return make_not(o.width, o.leak == "multiplicative"
                                 ? LeakMode::multiplicative
                                 : LeakMode::additive);
  }
  if (o.circuit == "inequality") {
    values = {{"A", o.a}, {"B", o.b}};
    return make_inequality(o.width, o.variant == "decay"
                                        ? IneqVariant::decay
                                        : IneqVariant::arithmetic);
  }
  if (o.circuit == "mux") {
    values = {{"A", o.a}, {"B", o.b}, {"select", o.select}};
    return make_mux(o.width);
  }
  if (o.circuit == "minmax") {
    values = {{"A", o.a}, {"B", o.b}};
    return make_minmax(o.width,
                       o.mode == "min" ? MinMaxMode::min : MinMaxMode::max);
  }
  if (o.circuit == "subtractor") {
    values = {{"A", o.a}, {"B", o.b}};
    return make_subtractor(o.width);
  }
  if (o.circuit == "scalar_mult") {
    values = {{"X", o.x}};
    return make_scalar_mult(o.scalar, o.width);
  }
  if (o.circuit == "variable_mult") {
    values = {{"X", o.x}, {"Y", o.y}};
    return make_variable_mult(o.width);
  }
  throw config_error("unknown circuit: " + o.circuit);
}

int cmd_run(const RunOptions& o) {
  std::map<std::string, std::int64_t> values;
  CircuitPlan plan = build_plan(o, values);
  Raster raster;
  const std::int64_t result = run_plan(plan, values, &raster);
  if (o.raw) {
    const PortSchedule& out = plan.lowered.schedule.at(plan.output);
    std::cout << "# " << plan.output << " offset=" << out.offset
              << " width=" << out.width << " spikes:";
    for (int t : raster.times(plan.lowered.net.output_taps.at(plan.output)))
      std::cout << ' ' << t;
    std::cout << "\n";
  }
  std::cout << result << "\n";
  if (!o.raster_file.empty())
    write_file(out_path(o.raster_file), raster_csv(raster));
  return kExitOk;
}

struct VerifyOptions {
  std::string circuit = "all";
  std::string widths = "1..4";
  std::string mode = "exhaustive";
  int samples = 1000;
  std::uint64_t seed = 0x5b175eedULL;
  std::string variant = "arithmetic";
  std::string leak = "additive";
  std::string minmax = "max";
  std::string mutate = "none";
  std::string report_file;
};

int cmd_verify(const VerifyOptions& o) {
  std::vector<SweepSpec> specs;
  SweepSpec base;
  base.widths = parse_widths(o.widths);
  base.mode = o.mode == "randomized" ? SweepMode::randomized
                                     : SweepMode::exhaustive;
  base.samples = o.samples;
  base.seed = o.seed;
  if (o.mutate == "adder-t2")
    base.mutation = Mutation::adder_t2_threshold;
  else if (o.mutate == "mux-select")
    base.mutation = Mutation::mux_select_self;
  else if (o.mutate != "none")
    throw config_error("unknown mutation: " + o.mutate);

  auto add_spec = [&](CircuitKind kind) {
    SweepSpec s = base;
    s.circuit = kind;
    s.leak = o.leak == "multiplicative" ? LeakMode::multiplicative
                                        : LeakMode::additive;
    s.variant =
        o.variant == "decay" ? IneqVariant::decay : IneqVariant::arithmetic;
    s.minmax_mode = o.minmax == "min" ? MinMaxMode::min : MinMaxMode::max;
    specs.push_back(s);
  };

  if (o.circuit == "all") {
    add_spec(CircuitKind::adder);
    for (LeakMode leak : {LeakMode::additive, LeakMode::multiplicative}) {
      SweepSpec s = base;
      s.circuit = CircuitKind::not_gate;
      s.leak = leak;
      specs.push_back(s);
    }
    for (IneqVariant v : {IneqVariant::arithmetic, IneqVariant::decay}) {
      SweepSpec s = base;
      s.circuit = CircuitKind::inequality;
      s.variant = v;
      specs.push_back(s);
    }
    add_spec(CircuitKind::mux);
    for (MinMaxMode m : {MinMaxMode::min, MinMaxMode::max}) {
      SweepSpec s = base;
      s.circuit = CircuitKind::minmax;
      s.minmax_mode = m;
      specs.push_back(s);
    }
    add_spec(CircuitKind::subtractor);
    add_spec(CircuitKind::scalar_mult);
    add_spec(CircuitKind::variable_mult);
  } else if (o.circuit == "adder") {
    add_spec(CircuitKind::adder);
  } else if (o.circuit == "not") {
    add_spec(CircuitKind::not_gate);
  } else if (o.circuit == "inequality") {
    add_spec(CircuitKind::inequality);
  } else if (o.circuit == "mux") {
    add_spec(CircuitKind::mux);
  } else if (o.circuit == "minmax") {
    add_spec(CircuitKind::minmax);
  } else if (o.circuit == "subtractor") {
    add_spec(CircuitKind::subtractor);
  } else if (o.circuit == "scalar_mult") {
    add_spec(CircuitKind::scalar_mult);
  } else if (o.circuit == "variable_mult") {
    add_spec(CircuitKind::variable_mult);
  } else {
    throw config_error("unknown circuit: " + o.circuit);
  }

  bool all_ok = true;
  std::string reports;
  for (const SweepSpec& spec : specs) {
    SweepReport report = run_sweep(spec);
    std::cout << report.text();
    if (!report.ok()) all_ok = false;
    reports += report_json(report);
  }
  if (!o.report_file.empty()) write_file(out_path(o.report_file), reports);
  std::cout << (all_ok ? "OK" : "FAILED") << "\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

struct ExportOptions {
  std::string circuit;
  std::string load_file;
  int width = 4;
  std::int64_t scalar = 5;
  std::string variant = "arithmetic";
  std::string leak = "additive";
  std::string mode = "max";
  std::string format = "netlist";
  std::string out_file;
};

int cmd_export(const ExportOptions& o) {
  LoweredNetwork low;
  std::string name = o.circuit;
  if (!o.load_file.empty()) {
    low = load_netlist(read_file(o.load_file));
    name = "netlist";
  } else {
    RunOptions ro;
    ro.circuit = o.circuit;
    ro.width = o.width;
    ro.scalar = o.scalar;
    ro.variant = o.variant;
    ro.leak = o.leak;
    ro.mode = o.mode;
    std::map<std::string, std::int64_t> unused;
    low = build_plan(ro, unused).lowered;
  }
  const std::string text =
      o.format == "dot" ? write_dot(low, name) : save_netlist(low);
  if (o.out_file.empty())
    std::cout << text;
  else
    write_file(out_path(o.out_file), text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming binary arithmetic on spiking neurons"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run_cmd =
      app.add_subcommand("run", "run a circuit on concrete operands");
  run_cmd->add_option("circuit", run_opts.circuit,
                      "adder|not|inequality|mux|minmax|subtractor|"
                      "scalar_mult|variable_mult")
      ->required();
  run_cmd->add_option("--width", run_opts.width, "operand bit width");
  run_cmd->add_option("--a", run_opts.a, "operand A");
  run_cmd->add_option("--b", run_opts.b, "operand B");
  run_cmd->add_option("--x", run_opts.x, "operand X");
  run_cmd->add_option("--y", run_opts.y, "operand Y");
  run_cmd->add_option("--scalar", run_opts.scalar, "constant factor");
  run_cmd->add_option("--select", run_opts.select, "mux select (0 or 1)");
  run_cmd->add_option("--variant", run_opts.variant, "arithmetic|decay");
  run_cmd->add_option("--leak", run_opts.leak, "additive|multiplicative");
  run_cmd->add_option("--mode", run_opts.mode, "min|max");
  run_cmd->add_flag("--raw", run_opts.raw, "also print output spike times");
  run_cmd->add_option("--raster", run_opts.raster_file,
                      "write the full raster CSV here");

  VerifyOptions verify_opts;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "differential sweep against the oracle");
  verify_cmd->add_option("--circuit", verify_opts.circuit, "circuit or 'all'");
  verify_cmd->add_option("--widths", verify_opts.widths,
                         "e.g. 4, 1..8, or 1,3,5");
  verify_cmd->add_option("--mode", verify_opts.mode,
                         "exhaustive|randomized");
  verify_cmd->add_option("--samples", verify_opts.samples,
                         "cases per width when randomized");
  verify_cmd->add_option("--seed", verify_opts.seed, "randomized-mode seed");
  verify_cmd->add_option("--variant", verify_opts.variant,
                         "inequality variant");
  verify_cmd->add_option("--leak", verify_opts.leak, "inverter leak model");
  verify_cmd->add_option("--minmax", verify_opts.minmax, "min|max");
  verify_cmd->add_option("--mutate", verify_opts.mutate,
                         "none|adder-t2|mux-select");
  verify_cmd->add_option("--report", verify_opts.report_file,
                         "write machine-readable reports here");

  ExportOptions export_opts;
  CLI::App* export_cmd =
      app.add_subcommand("export", "emit a netlist or dot graph");
  export_cmd->add_option("circuit", export_opts.circuit, "circuit name");
  export_cmd->add_option("--load", export_opts.load_file,
                         "re-export an existing netlist file");
  export_cmd->add_option("--width", export_opts.width, "operand bit width");
  export_cmd->add_option("--scalar", export_opts.scalar, "constant factor");
  export_cmd->add_option("--variant", export_opts.variant,
                         "inequality variant");
  export_cmd->add_option("--leak", export_opts.leak, "inverter leak model");
  export_cmd->add_option("--mode", export_opts.mode, "min|max");
  export_cmd->add_option("--format", export_opts.format, "netlist|dot");
  export_cmd->add_option("--out", export_opts.out_file,
                         "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts);
    if (export_cmd->parsed()) {
      if (export_opts.circuit.empty() && export_opts.load_file.empty())
        throw config_error("export needs a circuit name or --load");
      return cmd_export(export_opts);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
