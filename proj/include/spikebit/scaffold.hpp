// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// scaffold.hpp - composition of bricks into circuits: port wiring, automatic
// latency balancing, and lowering to one flat Network.
//
// The brick-level connection graph must be a DAG; feedback lives only inside
// bricks (the adder's carry loop, one-shot self-inhibition). Lowering walks
// the graph in topological order tracking each stream's *origin*: the
// absolute step at which bit 0 arrives at a port or leaves a neuron. Where
// streams of different origin meet at one brick, the shorter path is padded
// so every operand's bit i reaches the brick on the same step.
//
// An edge may also carry a `shift`: intentional extra delay that moves the
// bits to higher positions without moving the declared origin. Delaying a
// little-endian stream by one step against its origin doubles its value, so
// shifts are how multipliers express powers of two.
//
// Pads and shifts become either single high-delay synapses or chains of
// relay neurons, per DelayStyle; both lower to identical timing.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spikebit/bitstream.hpp"
#include "spikebit/brick.hpp"
#include "spikebit/network.hpp"

namespace spikebit {

enum class DelayStyle { synapse, relay };

struct PortSchedule {
  int offset = 0;
  int width = 0;
  Signedness signedness = Signedness::unsigned_int;
};

struct LoweredNetwork {
  Network net;
  std::map<std::string, PortSchedule> schedule;  // external ports
  std::map<std::string, int> neurons_per_brick;  // "(delays)" = inserted relays
  std::vector<int> timer_neurons;
  DelayStyle style = DelayStyle::synapse;
  int base = 1;  // arrival origin of an unpadded external bit 0
};

struct ScaffoldOffsets {
  std::map<std::string, int> in_arrival;  // "inst.port" -> bit-0 arrival step
  std::map<std::string, int> out_spike;   // "inst.port" -> bit-0 spike step
  std::map<std::string, int> brick_base;
};

class Scaffold {
 public:
  void add_brick(const std::string& name, Brick brick) {
    if (name.empty() || name.find('.') != std::string::npos)
      throw config_error("brick name must be nonempty and dot-free");
    if (index_.count(name)) throw config_error("duplicate brick name: " + name);
    index_[name] = static_cast<int>(bricks_.size());
    bricks_.push_back({name, std::move(brick)});
  }

  // Wires `from` ("inst.out_port") into `to` ("inst.in_port"). `shift` moves
  // the stream to higher bit positions; `extra` adds plain delay that the
  // balancer treats as part of the path.
  void connect(const std::string& from, const std::string& to, int shift = 0,
               int extra = 0) {
    if (shift < 0 || extra < 0)
      throw config_error("shift/extra must be >= 0");
    auto [fb, fp] = resolve_out(from);
    auto [tb, tp] = resolve_in(to);
    claim_driver(tb, tp, "connect " + from + " -> " + to);
    conns_.push_back({fb, fp, tb, tp, shift, extra});
    try {
      topo_order();  // cycles surface at the connect that closes them
    } catch (...) {
      conns_.pop_back();
      driven_.erase({tb, tp});
      throw;
    }
  }

  void bind_input(const std::string& ext, const std::string& to,
                  int extra = 0) {
    if (extra < 0) throw config_error("extra must be >= 0");
    if (input_binds_.count(ext))
      throw config_error("duplicate external input: " + ext);
    auto [tb, tp] = resolve_in(to);
    claim_driver(tb, tp, "input " + ext);
    input_binds_[ext] = {tb, tp, extra};
  }

  void bind_output(const std::string& ext, const std::string& from) {
    if (output_binds_.count(ext))
      throw config_error("duplicate external output: " + ext);
    auto [fb, fp] = resolve_out(from);
    output_binds_[ext] = {fb, fp};
  }

  int brick_count() const { return static_cast<int>(bricks_.size()); }

  // Total neurons across bricks, before any lowering-time relay insertion.
  int neuron_count() const {
    int n = 0;
    for (const auto& inst : bricks_) n += inst.brick.size();
    return n;
  }

  const Brick& brick(const std::string& name) const {
    return bricks_.at(instance(name)).brick;
  }

  // Bit-0 spike time of a bound external output; the end-to-end latency of
  // the longest path feeding it, inserted delays included.
  int latency(const std::string& ext_output) const {
    auto it = output_binds_.find(ext_output);
    if (it == output_binds_.end())
      throw config_error("unknown external output: " + ext_output);
    return offsets().out_spike.at(key(it->second.brick, it->second.port));
  }

  // Computes stream origins for every port. Lenient: undriven in-ports are
  // simply absent from the result.
  ScaffoldOffsets offsets() const {
    ScaffoldOffsets off;
    const std::vector<int> order = topo_order();
    for (int bi : order) {
      const auto& inst = bricks_[bi];
      // natural bit-0 arrival for each driven in-port
      std::map<std::string, int> nat;
      for (const auto& [ext, bind] : input_binds_)
        if (bind.brick == bi) nat[bind.port] = 1 + bind.extra;
      for (const auto& c : conns_)
        if (c.to_brick == bi)
          nat[c.to_port] = off.out_spike.at(key(c.from_brick, c.from_port)) +
                           1 + c.extra;
      int base = inst.brick.built_base;
      bool have_aligned = false;
      for (const auto& [port, arrival] : nat) {
        const BrickInPort& p = inst.brick.in_ports.at(port);
        if (p.align) {
          const int candidate = arrival - *p.align;
          base = have_aligned ? std::max(base, candidate) : candidate;
          have_aligned = true;
        }
      }
      off.brick_base[inst.name] = base;
      for (const auto& [port, arrival] : nat) {
        const BrickInPort& p = inst.brick.in_ports.at(port);
        off.in_arrival[key(bi, port)] = p.align ? base + *p.align : arrival;
      }
      for (const auto& [port, out] : inst.brick.out_ports) {
        off.out_spike[key(bi, port)] =
            out.absolute_origin ? *out.absolute_origin : base + out.latency;
      }
    }
    return off;
  }

  LoweredNetwork lower(DelayStyle style = DelayStyle::synapse) const {
    // strict: every non-optional in-port must be driven
    for (std::size_t bi = 0; bi < bricks_.size(); ++bi) {
      for (const auto& [port, p] : bricks_[bi].brick.in_ports) {
        if (!p.optional && !driven_.count({static_cast<int>(bi), port}))
          throw config_error("undriven port: " + key(static_cast<int>(bi), port));
      }
    }
    const ScaffoldOffsets off = offsets();

    LoweredNetwork low;
    low.style = style;
    std::vector<int> neuron_base(bricks_.size(), 0);
    for (std::size_t bi = 0; bi < bricks_.size(); ++bi) {
      const auto& inst = bricks_[bi];
      neuron_base[bi] = static_cast<int>(low.net.neurons.size());
      const int shift_steps =
          off.brick_base.at(inst.name) - inst.brick.built_base;
      std::set<int> timers(inst.brick.timer_neurons.begin(),
                           inst.brick.timer_neurons.end());
      for (int n = 0; n < inst.brick.size(); ++n) {
        NeuronConfig cfg = inst.brick.neurons[n];
        if (timers.count(n)) {
          cfg.threshold += static_cast<std::int64_t>(shift_steps) * unit();
          low.timer_neurons.push_back(neuron_base[bi] + n);
        }
        low.net.neurons.push_back(cfg);
        const std::string& l = inst.brick.labels[n];
        low.net.labels.push_back(l.empty() ? inst.name : inst.name + "." + l);
      }
      for (Synapse s : inst.brick.synapses) {
        s.pre += neuron_base[bi];
        s.post += neuron_base[bi];
        low.net.synapses.push_back(s);
      }
      low.neurons_per_brick[inst.name] = inst.brick.size();
    }

    int inserted = 0;
    auto emit_edge = [&](int pre, int post, std::int64_t weight, int delay) {
      if (style == DelayStyle::synapse || delay == 1) {
        low.net.synapses.push_back(Synapse{pre, post, weight, delay});
        return;
      }
      int head = pre;
      for (int i = 1; i < delay; ++i) {
        const int relay = static_cast<int>(low.net.neurons.size());
        low.net.neurons.push_back(relay_config());
        low.net.labels.push_back("pad." + std::to_string(inserted++));
        low.net.synapses.push_back(Synapse{head, relay, unit(), 1});
        head = relay;
      }
      low.net.synapses.push_back(Synapse{head, post, weight, 1});
    };

    for (const auto& c : conns_) {
      const auto& to_port =
          bricks_[c.to_brick].brick.in_ports.at(c.to_port);
      const int nat = off.out_spike.at(key(c.from_brick, c.from_port)) + 1 +
                      c.extra;
      const int pad =
          to_port.align ? off.in_arrival.at(key(c.to_brick, c.to_port)) - nat
                        : 0;
      const int pre = neuron_base[c.from_brick] +
                      bricks_[c.from_brick].brick.out_ports.at(c.from_port).neuron;
      const int post = neuron_base[c.to_brick] + to_port.neuron;
      emit_edge(pre, post, to_port.weight, 1 + c.shift + c.extra + pad);
    }
    if (inserted > 0) low.neurons_per_brick["(delays)"] = inserted;

    for (const auto& [ext, bind] : input_binds_) {
      const auto& port = bricks_[bind.brick].brick.in_ports.at(bind.port);
      const int nat = 1 + bind.extra;
      const int pad =
          port.align ? off.in_arrival.at(key(bind.brick, bind.port)) - nat : 0;
      low.net.input_taps[ext] = InputTap{neuron_base[bind.brick] + port.neuron,
                                         port.weight, 1 + bind.extra + pad};
      low.schedule[ext] = PortSchedule{0, 0, Signedness::unsigned_int};
    }
    for (const auto& [ext, bind] : output_binds_) {
      const auto& port = bricks_[bind.brick].brick.out_ports.at(bind.port);
      low.net.output_taps[ext] = neuron_base[bind.brick] + port.neuron;
      low.schedule[ext] =
          PortSchedule{off.out_spike.at(key(bind.brick, bind.port)), 0,
                       Signedness::unsigned_int};
    }
    validate(low.net);
    return low;
  }

 private:
  struct Instance {
    std::string name;
    Brick brick;
  };
  struct Conn {
    int from_brick;
    std::string from_port;
    int to_brick;
    std::string to_port;
    int shift;
    int extra;
  };
  struct InputBind {
    int brick;
    std::string port;
    int extra;
  };
  struct OutputBind {
    int brick;
    std::string port;
  };

  int instance(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw config_error("unknown brick: " + name);
    return it->second;
  }

  std::pair<int, std::string> split(const std::string& ref) const {
    const auto dot = ref.find('.');
    if (dot == std::string::npos)
      throw config_error("port reference must be 'brick.port': " + ref);
    return {instance(ref.substr(0, dot)), ref.substr(dot + 1)};
  }

  std::pair<int, std::string> resolve_in(const std::string& ref) const {
    auto [bi, port] = split(ref);
    if (!bricks_[bi].brick.in_ports.count(port))
      throw config_error("unknown in-port: " + ref);
    return {bi, port};
  }

  std::pair<int, std::string> resolve_out(const std::string& ref) const {
    auto [bi, port] = split(ref);
    if (!bricks_[bi].brick.out_ports.count(port))
      throw config_error("unknown out-port: " + ref);
    return {bi, port};
  }

  void claim_driver(int brick, const std::string& port,
                    const std::string& what) {
    if (!driven_.insert({brick, port}).second)
      throw config_error("port already driven (" + what + ")");
  }

  std::string key(int brick, const std::string& port) const {
    return bricks_[brick].name + "." + port;
  }

  std::vector<int> topo_order() const {
    std::vector<std::set<int>> succ(bricks_.size());
    std::vector<int> indeg(bricks_.size(), 0);
    for (const auto& c : conns_) {
      if (c.from_brick == c.to_brick)
        throw config_error("brick-level cycle at " + bricks_[c.from_brick].name);
      if (succ[c.from_brick].insert(c.to_brick).second) ++indeg[c.to_brick];
    }
    std::vector<int> ready, order;
    for (std::size_t i = 0; i < bricks_.size(); ++i)
      if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
    while (!ready.empty()) {
      // smallest index first keeps lowering deterministic
      const auto it = std::min_element(ready.begin(), ready.end());
      const int bi = *it;
      ready.erase(it);
      order.push_back(bi);
      for (int nxt : succ[bi])
        if (--indeg[nxt] == 0) ready.push_back(nxt);
    }
    if (order.size() != bricks_.size())
      throw config_error("brick-level cycle in scaffold");
    return order;
  }

  std::vector<Instance> bricks_;
  std::map<std::string, int> index_;
  std::vector<Conn> conns_;
  std::map<std::string, InputBind> input_binds_;
  std::map<std::string, OutputBind> output_binds_;
  std::set<std::pair<int, std::string>> driven_;
};

// Wraps a lowered scaffold back into a brick so composites nest. Port
// alignment is reconstructed from the tap delays; timers keep retiming
// correctly through the carried timer list.
inline Brick as_brick(const LoweredNetwork& low) {
  Brick b;
  b.neurons = low.net.neurons;
  b.labels = low.net.labels;
  b.synapses = low.net.synapses;
  b.timer_neurons = low.timer_neurons;
  b.built_base = low.base;
  for (const auto& [ext, tap] : low.net.input_taps)
    b.in_ports[ext] = BrickInPort{tap.neuron, tap.weight, tap.delay - 1, false};
  for (const auto& [ext, id] : low.net.output_taps)
    b.out_ports[ext] =
        BrickOutPort{id, low.schedule.at(ext).offset - low.base, {}};
  return b;
}

}  // namespace spikebit
