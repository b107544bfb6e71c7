// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// netlist_io.hpp - file formats: versioned JSON netlists (exact round trip,
// including the fixed-point scale), raster CSV, and Graphviz dot export.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spikebit/scaffold.hpp"
#include "spikebit/sweep.hpp"

namespace spikebit {

using ordered_json = nlohmann::ordered_json;

inline const char* to_string(LeakMode m) {
  return m == LeakMode::additive ? "additive" : "multiplicative";
}
inline const char* to_string(Signedness s) {
  return s == Signedness::unsigned_int ? "unsigned" : "twos_complement";
}

inline LeakMode leak_from_string(const std::string& s) {
  if (s == "additive") return LeakMode::additive;
  if (s == "multiplicative") return LeakMode::multiplicative;
  throw config_error("unknown leak mode: " + s);
}
inline Signedness signedness_from_string(const std::string& s) {
  if (s == "unsigned") return Signedness::unsigned_int;
  if (s == "twos_complement") return Signedness::twos_complement;
  throw config_error("unknown signedness: " + s);
}

inline std::string save_netlist(const LoweredNetwork& low) {
  ordered_json j;
  j["format"] = "spikebit-netlist";
  j["version"] = 1;
  j["scale_bits"] = low.net.scale_bits;
  j["delay_style"] = low.style == DelayStyle::synapse ? "synapse" : "relay";
  ordered_json neurons = ordered_json::array();
  for (std::size_t i = 0; i < low.net.neurons.size(); ++i) {
    const NeuronConfig& n = low.net.neurons[i];
    ordered_json e;
    e["id"] = i;
    e["label"] = low.net.label(static_cast<int>(i));
    e["threshold"] = n.threshold;
    e["leak_mode"] = to_string(n.leak_mode);
    e["leak_value"] = n.leak_value;
    e["reset"] = n.reset_potential;
    e["initial"] = n.initial_potential;
    neurons.push_back(std::move(e));
  }
  j["neurons"] = std::move(neurons);
  ordered_json synapses = ordered_json::array();
  for (const Synapse& s : low.net.synapses) {
    ordered_json e;
    e["pre"] = s.pre;
    e["post"] = s.post;
    e["weight"] = s.weight;
    e["delay"] = s.delay;
    synapses.push_back(std::move(e));
  }
  j["synapses"] = std::move(synapses);
  ordered_json inputs = ordered_json::object();
  for (const auto& [name, tap] : low.net.input_taps) {
    ordered_json e;
    e["neuron"] = tap.neuron;
    e["weight"] = tap.weight;
    e["delay"] = tap.delay;
    inputs[name] = std::move(e);
  }
  j["inputs"] = std::move(inputs);
  ordered_json outputs = ordered_json::object();
  for (const auto& [name, id] : low.net.output_taps) outputs[name] = id;
  j["outputs"] = std::move(outputs);
  ordered_json schedule = ordered_json::object();
  for (const auto& [name, ps] : low.schedule) {
    ordered_json e;
    e["offset"] = ps.offset;
    e["width"] = ps.width;
    e["signedness"] = to_string(ps.signedness);
    schedule[name] = std::move(e);
  }
  j["schedule"] = std::move(schedule);
  ordered_json timers = ordered_json::array();
  for (int t : low.timer_neurons) timers.push_back(t);
  j["timers"] = std::move(timers);
  return j.dump(2) + "\n";
}

inline LoweredNetwork load_netlist(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.value("format", "") != std::string("spikebit-netlist"))
    throw config_error("not a spikebit netlist");
  if (j.value("version", 0) != 1)
    throw config_error("unsupported netlist version");
  LoweredNetwork low;
  low.net.scale_bits = j.at("scale_bits").get<int>();
  low.style = j.value("delay_style", "synapse") == std::string("relay")
                  ? DelayStyle::relay
                  : DelayStyle::synapse;
  for (const auto& e : j.at("neurons")) {
    NeuronConfig n;
    n.threshold = e.at("threshold").get<std::int64_t>();
    n.leak_mode = leak_from_string(e.at("leak_mode").get<std::string>());
    n.leak_value = e.at("leak_value").get<std::int64_t>();
    n.reset_potential = e.at("reset").get<std::int64_t>();
    n.initial_potential = e.at("initial").get<std::int64_t>();
    low.net.neurons.push_back(n);
    low.net.labels.push_back(e.at("label").get<std::string>());
  }
  for (const auto& e : j.at("synapses")) {
    low.net.synapses.push_back(Synapse{
        e.at("pre").get<int>(), e.at("post").get<int>(),
        e.at("weight").get<std::int64_t>(), e.at("delay").get<int>()});
  }
  for (const auto& [name, e] : j.at("inputs").items()) {
    low.net.input_taps[name] =
        InputTap{e.at("neuron").get<int>(), e.at("weight").get<std::int64_t>(),
                 e.at("delay").get<int>()};
  }
  for (const auto& [name, e] : j.at("outputs").items())
    low.net.output_taps[name] = e.get<int>();
  for (const auto& [name, e] : j.at("schedule").items()) {
    low.schedule[name] = PortSchedule{
        e.at("offset").get<int>(), e.at("width").get<int>(),
        signedness_from_string(e.at("signedness").get<std::string>())};
  }
  for (const auto& e : j.at("timers")) low.timer_neurons.push_back(e.get<int>());
  validate(low.net);
  return low;
}

// Raster CSV: versioned header, then time,neuron rows sorted by time then id.
inline std::string raster_csv(const Raster& raster) {
  std::ostringstream os;
  os << "# spikebit-raster v1\n";
  os << "time,neuron\n";
  for (const auto& [t, id] : raster.events) os << t << ',' << id << '\n';
  return os.str();
}

namespace detail {

// Weights and thresholds print in whole potential units where exact,
// otherwise as raw quanta over the scale.
inline std::string show_quanta(std::int64_t q, int scale_bits) {
  const std::int64_t u = unit(scale_bits);
  std::ostringstream os;
  if (q % u == 0) {
    os << q / u;
  } else {
    os << q << "/2^" << scale_bits;
  }
  return os.str();
}

}  // namespace detail

inline std::string write_dot(const LoweredNetwork& low,
                             const std::string& name = "network") {
  const int sb = low.net.scale_bits;
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < low.net.neurons.size(); ++i) {
    const NeuronConfig& n = low.net.neurons[i];
    const std::string label = low.net.label(static_cast<int>(i));
    os << "  n" << i << " [label=\"" << (label.empty() ? "n" + std::to_string(i)
                                                       : label)
       << "\\nthr " << detail::show_quanta(n.threshold, sb) << ", "
       << (n.leak_mode == LeakMode::additive ? "leak " : "decay ")
       << detail::show_quanta(n.leak_value, sb) << "\"];\n";
  }
  for (const Synapse& s : low.net.synapses) {
    os << "  n" << s.pre << " -> n" << s.post << " [label=\""
       << detail::show_quanta(s.weight, sb) << " d" << s.delay << "\"";
    if (s.weight < 0) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& [port, tap] : low.net.input_taps) {
    os << "  in_" << port << " [label=\"" << port
       << "\", shape=plaintext];\n";
    os << "  in_" << port << " -> n" << tap.neuron << " [label=\""
       << detail::show_quanta(tap.weight, sb) << " d" << tap.delay
       << "\", color=gray];\n";
  }
  for (const auto& [port, id] : low.net.output_taps) {
    os << "  out_" << port << " [label=\"" << port
       << "\", shape=plaintext];\n";
    os << "  n" << id << " -> out_" << port << " [color=gray];\n";
  }
  os << "}\n";
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Machine-readable sweep report.
inline std::string report_json(const SweepReport& r) {
  ordered_json j;
  j["format"] = "spikebit-report";
  j["version"] = 1;
  j["circuit"] = r.circuit;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  ordered_json widths = ordered_json::array();
  for (const WidthResult& w : r.widths) {
    ordered_json e;
    e["width"] = w.width;
    e["cases"] = w.cases;
    e["failures"] = w.failures;
    if (w.first_failure) {
      ordered_json f;
      for (const auto& [name, v] : w.first_failure->operands) f[name] = v;
      f["expected"] = w.first_failure->expected;
      f["got"] = w.first_failure->got;
      f["raster"] = w.first_failure->raster;
      e["first_failure"] = std::move(f);
    }
    widths.push_back(std::move(e));
  }
  j["widths"] = std::move(widths);
  j["total_cases"] = r.total_cases;
  j["total_failures"] = r.total_failures;
  j["neurons"] = r.neuron_count;
  return j.dump(2) + "\n";
}

}  // namespace spikebit
