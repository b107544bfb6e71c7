// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// bricks.hpp - builders for the primitive circuit bricks: streaming adder,
// inverter (both leak flavours), carry-bit check, 2-to-1 mux, delay line and
// the small support pieces (relay, one-shot generator, latch, gate).
//
// Neurons that must evaluate each step's input in isolation use a
// multiplicative leak of 0: the potential clears every step, so the neuron
// is a pure coincidence detector with no drift between bits.

#pragma once

#include <stdexcept>

#include "spikebit/brick.hpp"

namespace spikebit {

// Large inhibition used to hold one-shot neurons down after they fire. The
// additive +1/step recharge would need ~2^20 steps to recover, far beyond
// any circuit horizon here.
inline std::int64_t one_shot_inhibit() { return -(unit() << 20); }

inline NeuronConfig coincidence_config(std::int64_t threshold_units) {
  return NeuronConfig{threshold_units * unit(), LeakMode::multiplicative, 0, 0,
                      0};
}

// Pass-through neuron: arrival at t, spike at t. Latency 0.
inline Brick build_relay() {
  Brick b;
  const int r = b.add(relay_config(), "relay");
  b.in_ports["X"] = BrickInPort{r, unit(), 0, false};
  b.out_ports["Y"] = BrickOutPort{r, 0, {}};
  return b;
}

// Streaming binary adder: ports A, B -> S (sum) and C (carry line).
//
// Three hidden neurons t1/t2/t3 with thresholds 1/2/3 each count this step's
// arrivals: operand bits plus t2's delayed spike, which recirculates the
// carry. The sum neuron fires when the count is odd (t1 - t2 + t3); t2
// itself is the carry out of the current position. Latency A/B -> S is 2,
// A/B -> C is 1. For k-bit operands the sum is valid over k+1 positions,
// the overflow bit riding in the extra timestep.
inline Brick build_adder() {
  Brick b;
  const int a = b.add(relay_config(), "a");
  const int bb = b.add(relay_config(), "b");
  const int t1 = b.add(coincidence_config(1), "t1");
  const int t2 = b.add(coincidence_config(2), "t2");
  const int t3 = b.add(coincidence_config(3), "t3");
  const int s = b.add(relay_config(), "s");
  for (int tap : {a, bb, t2})  // t2 -> hidden layer closes the carry loop
    for (int hidden : {t1, t2, t3}) b.wire(tap, hidden, unit());
  b.wire(t1, s, unit());
  b.wire(t2, s, -unit());
  b.wire(t3, s, unit());
  b.in_ports["A"] = BrickInPort{a, unit(), 0, false};
  b.in_ports["B"] = BrickInPort{bb, unit(), 0, false};
  b.out_ports["S"] = BrickOutPort{s, 2, {}};
  b.out_ports["C"] = BrickOutPort{t2, 1, {}};
  return b;
}

// Inverting neuron: port X -> notX, latency 0. Complement is meaningful
// within the driven window only; outside it the neuron free-runs.
//
// additive: one neuron, leak +1, threshold 1, input weight -1. A quiet step
// leaks across threshold; an input spike cancels the leak exactly.
//
// multiplicative: two neurons. A self-excited oscillator fires every step
// and feeds the output neuron +1; the input inhibits with -1.
inline Brick build_not(LeakMode leak) {
  Brick b;
  if (leak == LeakMode::additive) {
    NeuronConfig cfg{unit(), LeakMode::additive, unit(), 0, 0};
    const int n = b.add(cfg, "not");
    b.in_ports["X"] = BrickInPort{n, -unit(), 0, false};
    b.out_ports["notX"] = BrickOutPort{n, 0, {}};
    return b;
  }
  if (leak != LeakMode::multiplicative)
    throw config_error("unknown leak model");
  NeuronConfig osc{unit(), LeakMode::multiplicative, unit(), 0, unit()};
  const int o = b.add(osc, "osc");
  const int n = b.add(coincidence_config(1), "not");
  b.wire(o, o, unit());
  b.wire(o, n, unit());
  b.in_ports["X"] = BrickInPort{n, -unit(), 0, false};
  b.out_ports["notX"] = BrickOutPort{n, 0, {}};
  return b;
}

// Charge-to-fire one-shot: fires exactly once, at `fire_time`. The +1/step
// leak climbs from 0 and crosses threshold fire_time + 1 at that step; the
// big negative self-synapse keeps it from ever recharging.
inline Brick build_one_shot(int fire_time, const std::string& label = "timer") {
  if (fire_time < 0) throw std::invalid_argument("fire_time must be >= 0");
  Brick b;
  NeuronConfig cfg{(fire_time + 1) * unit(), LeakMode::additive, unit(), 0, 0};
  const int t = b.add(cfg, label);
  b.wire(t, t, one_shot_inhibit());
  b.out_ports["spike"] = BrickOutPort{t, 0, fire_time};
  b.timer_neurons.push_back(t);
  return b;
}

// Carry-bit check: watches one stream and spikes iff the stream's bit at
// `bit_index` is set. Two neurons: the check (threshold 2, +1 from the
// stream) and a one-shot timer whose spike reaches the check exactly when
// that bit arrives. `input_origin` is the absolute arrival step of the
// stream's bit 0 at the check neuron.
inline Brick build_carry_check(int bit_index, int input_origin) {
  if (bit_index < 0) throw std::invalid_argument("bit_index must be >= 0");
  if (input_origin < 1)
    throw std::invalid_argument("input_origin must be >= 1");
  Brick b;
  const int check = b.add(coincidence_config(2), "check");
  const int fire = input_origin + bit_index - 1;  // +1 synapse delay to check
  NeuronConfig timer{(fire + 1) * unit(), LeakMode::additive, unit(), 0, 0};
  const int t = b.add(timer, "timer");
  b.wire(t, t, one_shot_inhibit());
  b.wire(t, check, unit());
  b.in_ports["S"] = BrickInPort{check, unit(), 0, false};
  b.out_ports["gt"] = BrickOutPort{check, bit_index, {}};
  b.timer_neurons.push_back(t);
  b.built_base = input_origin;
  return b;
}

// Streaming 2-to-1 mux, four neurons. With the select neuron quiet, a_in
// mirrors A and b_in is held below threshold; a firing select neuron
// reverses both roles. The select neuron stretches a single trigger spike
// into consecutive spikes through its self-loop until the inhibitory `stop`
// port ends the burst; the enclosing circuit times the stop so the burst
// covers exactly the k-bit window. The trigger must arrive one step before
// bit 0 of A/B.
inline Brick build_mux() {
  Brick b;
  const int a_in = b.add(coincidence_config(1), "a_in");
  const int b_in = b.add(coincidence_config(2), "b_in");
  const int sel = b.add(coincidence_config(1), "select");
  const int out = b.add(relay_config(), "out");
  b.wire(sel, sel, unit());
  b.wire(sel, a_in, -unit());
  b.wire(sel, b_in, unit());
  b.wire(a_in, out, unit());
  b.wire(b_in, out, unit());
  b.in_ports["A"] = BrickInPort{a_in, unit(), 0, false};
  b.in_ports["B"] = BrickInPort{b_in, unit(), 0, false};
  b.in_ports["select"] = BrickInPort{sel, unit(), -1, false};
  b.in_ports["stop"] = BrickInPort{sel, -2 * unit(), std::nullopt, true};
  b.out_ports["out"] = BrickOutPort{out, 1, {}};
  return b;
}

// Pure delay: X -> X delayed by exactly d timesteps (d >= 1), realized as an
// entry relay and an exit relay joined by a single delay-d synapse.
inline Brick build_delay(int d) {
  if (d < 1) throw std::invalid_argument("delay must be >= 1");
  Brick b;
  const int in = b.add(relay_config(), "in");
  const int out = b.add(relay_config(), "out");
  b.wire(in, out, unit(), d);
  b.in_ports["X"] = BrickInPort{in, unit(), 0, false};
  b.out_ports["Y"] = BrickOutPort{out, d, {}};
  return b;
}

// Set/hold latch: starts firing when `set_a` and `set_b` coincide, sustains
// itself until `stop` arrives. Used to gate multiplier stages.
inline Brick build_latch() {
  Brick b;
  const int l = b.add(coincidence_config(2), "latch");
  b.wire(l, l, 2 * unit());
  b.in_ports["set_a"] = BrickInPort{l, unit(), std::nullopt, false};
  b.in_ports["set_b"] = BrickInPort{l, unit(), std::nullopt, false};
  b.in_ports["stop"] = BrickInPort{l, -4 * unit(), std::nullopt, true};
  b.out_ports["q"] = BrickOutPort{l, 0, {}};
  return b;
}

// Stream gate: passes `stream` bits only while `enable` fires.
inline Brick build_gate() {
  Brick b;
  const int g = b.add(coincidence_config(2), "gate");
  b.in_ports["stream"] = BrickInPort{g, unit(), 0, false};
  b.in_ports["enable"] = BrickInPort{g, unit(), std::nullopt, false};
  b.out_ports["out"] = BrickOutPort{g, 0, {}};
  return b;
}

// Sink that never fires; stands in for a circuit with a constant-zero
// output (scalar multiplication by 0).
inline Brick build_silent() {
  Brick b;
  NeuronConfig cfg{std::int64_t{1} << 60, LeakMode::multiplicative, 0, 0, 0};
  const int n = b.add(cfg, "silent");
  b.in_ports["X"] = BrickInPort{n, unit(), 0, false};
  b.out_ports["Y"] = BrickOutPort{n, 0, {}};
  return b;
}

}  // namespace spikebit
