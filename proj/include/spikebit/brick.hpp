// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// brick.hpp - a brick is a reusable network fragment with named ports and a
// declared latency, the unit of circuit composition.
//
// Timing convention: an in-port's bit-i time is the *arrival* step of the
// weighted pulse at the port neuron; an out-port's bit-i time is the *spike*
// step of the port neuron. A brick with latency L turns an input bit
// arriving at step tau into an output bit spiking at step tau + L, for every
// bit position alike.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spikebit/network.hpp"

namespace spikebit {

// Threshold-1 pass-through neuron; also the padding element for relay-style
// delay insertion.
inline NeuronConfig relay_config() {
  return NeuronConfig{unit(), LeakMode::additive, 0, 0, 0};
}

struct BrickInPort {
  int neuron = 0;
  std::int64_t weight = 0;
  // Required arrival origin relative to the brick base. nullopt marks a
  // free-running port (probe/stop style) that the scaffold never aligns.
  std::optional<int> align = 0;
  bool optional = false;  // may stay undriven
};

struct BrickOutPort {
  int neuron = 0;
  int latency = 0;
  // Set for source bricks (generators/timers): the out spike time is fixed
  // on the absolute clock instead of relative to inputs.
  std::optional<int> absolute_origin;
};

struct Brick {
  std::vector<NeuronConfig> neurons;
  std::vector<std::string> labels;
  std::vector<Synapse> synapses;
  std::map<std::string, BrickInPort> in_ports;
  std::map<std::string, BrickOutPort> out_ports;
  // Neurons whose threshold encodes an absolute fire time (charge-to-fire
  // timers). Re-basing the brick shifts these thresholds.
  std::vector<int> timer_neurons;
  int built_base = 1;  // arrival origin the timers were computed against

  int add(const NeuronConfig& cfg, const std::string& label) {
    neurons.push_back(cfg);
    labels.push_back(label);
    return static_cast<int>(neurons.size()) - 1;
  }

  void wire(int pre, int post, std::int64_t weight, int delay = 1) {
    synapses.push_back(Synapse{pre, post, weight, delay});
  }

  int size() const { return static_cast<int>(neurons.size()); }
};

}  // namespace spikebit
