// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// network.hpp - blueprint types and the cycle-accurate simulator for
// discrete-time leaky integrate-and-fire networks.
//
// Potentials, thresholds and synapse weights are exact signed integers
// counted in quanta of 2^-scale_bits potential units, so a run is
// bit-for-bit reproducible on any platform. Multiplicative decay factors
// are rationals with denominator 2^scale_bits; the decay product rounds
// toward zero.
//
// One timestep, per neuron, in this exact order:
//   1. sum the weights of all spikes arriving at t (synapses + injections)
//   2. additive leak:        V <- V + leak_value + input
//      multiplicative leak:  V <- (V * leak_value) / 2^scale_bits + input
//   3. if V >= threshold the neuron spikes at t and V <- reset_potential
//
// Spikes emitted at t are integrated at t + delay by each outgoing synapse,
// and delay >= 1, so every neuron reads only pre-step state (synchronous
// update).

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spikebit {

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LeakMode { additive, multiplicative };

constexpr int kDefaultScaleBits = 8;

// One whole potential unit, in quanta.
constexpr std::int64_t unit(int scale_bits = kDefaultScaleBits) {
  return std::int64_t{1} << scale_bits;
}

struct NeuronConfig {
  std::int64_t threshold = unit();
  LeakMode leak_mode = LeakMode::additive;
  // additive: quanta added per step; multiplicative: factor * 2^scale_bits.
  std::int64_t leak_value = 0;
  std::int64_t reset_potential = 0;
  std::int64_t initial_potential = 0;
};

struct Synapse {
  int pre = 0;
  int post = 0;
  std::int64_t weight = 0;  // quanta
  int delay = 1;            // timesteps, >= 1
};

// External injection point. A spike emitted on the named input at time t is
// integrated by `neuron` at t + delay with the given weight.
struct InputTap {
  int neuron = 0;
  std::int64_t weight = 0;
  int delay = 1;
};

struct Network {
  std::vector<NeuronConfig> neurons;
  std::vector<Synapse> synapses;
  std::map<std::string, InputTap> input_taps;
  std::map<std::string, int> output_taps;
  std::vector<std::string> labels;  // parallel to neurons, entries may be ""
  int scale_bits = kDefaultScaleBits;

  std::string label(int id) const {
    if (id >= 0 && id < static_cast<int>(labels.size())) return labels[id];
    return {};
  }

  // First neuron whose label ends with `suffix`, -1 if none.
  int find_label(const std::string& suffix) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::string& l = labels[i];
      if (l.size() >= suffix.size() &&
          l.compare(l.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }
};

inline void validate(const Network& net) {
  const int n = static_cast<int>(net.neurons.size());
  if (net.scale_bits < 0 || net.scale_bits > 30)
    throw config_error("scale_bits out of range");
  for (const NeuronConfig& cfg : net.neurons) {
    if (cfg.leak_mode == LeakMode::multiplicative &&
        (cfg.leak_value < 0 || cfg.leak_value > unit(net.scale_bits)))
      throw config_error("multiplicative leak factor must be in [0, 1]");
  }
  for (const Synapse& s : net.synapses) {
    if (s.pre < 0 || s.pre >= n || s.post < 0 || s.post >= n)
      throw config_error("synapse endpoint out of range");
    if (s.delay < 1) throw config_error("synapse delay must be >= 1");
  }
  for (const auto& [name, tap] : net.input_taps) {
    if (tap.neuron < 0 || tap.neuron >= n)
      throw config_error("input tap '" + name + "' targets missing neuron");
    if (tap.delay < 1) throw config_error("input tap delay must be >= 1");
  }
  for (const auto& [name, id] : net.output_taps) {
    if (id < 0 || id >= n)
      throw config_error("output tap '" + name + "' targets missing neuron");
  }
}

// Multiplicative decay, rounding toward zero. C++20 guarantees arithmetic
// right shift on signed values.
inline std::int64_t decay_scaled(std::int64_t v, std::int64_t factor_raw,
                                 int scale_bits) {
  const std::int64_t p = v * factor_raw;
  return p >= 0 ? (p >> scale_bits) : -((-p) >> scale_bits);
}

struct Raster {
  std::vector<std::pair<int, int>> events;  // (time, neuron), time-major order
  int horizon = 0;

  bool spiked(int time, int neuron) const {
    return std::binary_search(events.begin(), events.end(),
                              std::make_pair(time, neuron));
  }
  std::vector<int> times(int neuron) const {
    std::vector<int> out;
    for (const auto& [t, id] : events)
      if (id == neuron) out.push_back(t);
    return out;
  }
};

class Simulation {
 public:
  explicit Simulation(const Network& net) : net_(&net) {
    validate(net);
    potentials_.reserve(net.neurons.size());
    for (const NeuronConfig& cfg : net.neurons)
      potentials_.push_back(cfg.initial_potential);
    out_.resize(net.neurons.size());
    int max_delay = 1;
    for (const Synapse& s : net.synapses) {
      out_[s.pre].push_back(s);
      max_delay = std::max(max_delay, s.delay);
    }
    ring_.assign(static_cast<std::size_t>(max_delay) + 1,
                 std::vector<std::int64_t>(net.neurons.size(), 0));
  }

  int now() const { return now_; }
  std::int64_t potential(int neuron) const { return potentials_.at(neuron); }

  // Schedules one emission on a named external input.
  void schedule_input(const std::string& name, int time) {
    auto it = net_->input_taps.find(name);
    if (it == net_->input_taps.end())
      throw config_error("unknown input tap: " + name);
    if (time < 0) throw std::invalid_argument("input spike time must be >= 0");
    if (time + it->second.delay < now_)
      throw std::invalid_argument("input spike scheduled in the past");
    injections_[time + it->second.delay].emplace_back(it->second.neuron,
                                                      it->second.weight);
  }

  // Advances one timestep; returns ids spiking at the step just simulated,
  // in ascending order.
  const std::vector<int>& step() {
    auto& arrivals = ring_[static_cast<std::size_t>(now_) % ring_.size()];
    if (auto it = injections_.find(now_); it != injections_.end()) {
      for (const auto& [neuron, w] : it->second) arrivals[neuron] += w;
      injections_.erase(it);
    }
    spiking_.clear();
    for (std::size_t i = 0; i < potentials_.size(); ++i) {
      const NeuronConfig& cfg = net_->neurons[i];
      std::int64_t v = potentials_[i];
      if (cfg.leak_mode == LeakMode::additive) {
        v += cfg.leak_value + arrivals[i];
      } else {
        v = decay_scaled(v, cfg.leak_value, net_->scale_bits) + arrivals[i];
      }
      if (v >= cfg.threshold) {
        spiking_.push_back(static_cast<int>(i));
        v = cfg.reset_potential;
      }
      potentials_[i] = v;
    }
    std::fill(arrivals.begin(), arrivals.end(), 0);
    for (int id : spiking_)
      for (const Synapse& s : out_[id])
        ring_[static_cast<std::size_t>(now_ + s.delay) % ring_.size()][s.post] +=
            s.weight;
    ++now_;
    return spiking_;
  }

 private:
  const Network* net_;
  std::vector<std::int64_t> potentials_;
  std::vector<std::vector<Synapse>> out_;
  std::vector<std::vector<std::int64_t>> ring_;  // arrivals per (t mod size)
  std::map<int, std::vector<std::pair<int, std::int64_t>>> injections_;
  std::vector<int> spiking_;
  int now_ = 0;
};

// Runs a blueprint from scratch over [0, horizon).
inline Raster run(const Network& net,
                  const std::map<std::string, std::vector<int>>& inputs,
                  int horizon) {
  if (horizon <= 0) throw std::invalid_argument("horizon must be positive");
  Simulation sim(net);
  for (const auto& [name, times] : inputs) {
    for (int t : times) {
      if (t >= horizon)
        throw std::invalid_argument("input spike at or beyond horizon");
      sim.schedule_input(name, t);
    }
  }
  Raster raster;
  raster.horizon = horizon;
  for (int t = 0; t < horizon; ++t)
    for (int id : sim.step()) raster.events.emplace_back(t, id);
  return raster;
}

}  // namespace spikebit
