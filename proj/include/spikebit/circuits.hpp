// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// circuits.hpp - the circuit library built from bricks, plus runnable plans.
//
// Each make_* function assembles a scaffold, lowers it, and returns a
// CircuitPlan carrying the flat network together with everything needed to
// run it on concrete operands: which ports take operands at which widths,
// auxiliary timed spikes (mux stop, decay probe), the decode window of the
// output, and a safe horizon. Composite bricks are also exposed on their
// own for structural use.
//
// A note on windows: the inverting neuron free-runs outside the k-bit
// window it complements. Ones spilling into positions below 0 or above k
// ride on a single adder input, where a lone 1 per position can never mint
// a carry, so bits inside the window stay exact. The inequality circuit
// therefore reads its verdict from the adder's carry line, whose bit k-1 is
// the end-around carry of A + inv(B), untouched by the spill.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikebit/bricks.hpp"
#include "spikebit/scaffold.hpp"

namespace spikebit {

enum class IneqVariant { arithmetic, decay };
enum class MinMaxMode { min, max };

struct AuxSpike {
  std::string port;
  int time;
};

struct CircuitPlan {
  std::string name;
  LoweredNetwork lowered;
  std::vector<std::string> operands;  // encode ports, CLI order
  std::string output;
  std::vector<AuxSpike> aux;
  int horizon = 0;
};

inline int bit_length(std::int64_t a) {
  int n = 0;
  while (a > 0) {
    ++n;
    a >>= 1;
  }
  return n;
}

namespace detail {

inline void set_port(LoweredNetwork& low, const std::string& port, int width,
                     Signedness sign = Signedness::unsigned_int) {
  auto& ps = low.schedule.at(port);
  ps.width = width;
  ps.signedness = sign;
}

inline void finish(CircuitPlan& plan, int k,
                   Signedness out_sign = Signedness::unsigned_int,
                   int out_width = -1) {
  for (const std::string& op : plan.operands)
    if (plan.lowered.schedule.at(op).width == 0)
      detail::set_port(plan.lowered, op, k);
  auto& out = plan.lowered.schedule.at(plan.output);
  out.width = out_width < 0 ? k : out_width;
  out.signedness = out_sign;
  plan.horizon = out.offset + out.width + 2;
}

}  // namespace detail

inline CircuitPlan make_adder(int k) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  Scaffold sc;
  sc.add_brick("add", build_adder());
  sc.bind_input("A", "add.A");
  sc.bind_input("B", "add.B");
  sc.bind_output("S", "add.S");
  CircuitPlan plan{"adder", sc.lower(), {"A", "B"}, "S", {}, 0};
  detail::finish(plan, k, Signedness::unsigned_int, k + 1);
  return plan;
}

inline CircuitPlan make_not(int k, LeakMode leak) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  Scaffold sc;
  sc.add_brick("inv", build_not(leak));
  sc.bind_input("X", "inv.X");
  sc.bind_output("notX", "inv.notX");
  CircuitPlan plan{"not", sc.lower(), {"X"}, "notX", {}, 0};
  detail::finish(plan, k);
  return plan;
}

// Single-neuron inequality for platforms with multiplicative decay. Bits of
// A add +w and bits of B add -w; halving the potential every step weights
// position t by 2^t at probe time, so the settled potential is
// w' * (A - B). The probe injects threshold minus one quantum: the neuron
// fires iff the potential is positive, i.e. iff A > B. All contributions
// are even powers of two, so the 0.50 decay stays exact in fixed point.
inline Brick build_inequality_decay(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("width must be in [1, 16]");
  Brick b;
  const std::int64_t w = std::int64_t{1} << (k + 1);  // quanta
  const std::int64_t threshold = 4 * w;
  NeuronConfig check{threshold, LeakMode::multiplicative, unit() / 2, 0, 0};
  const int c = b.add(check, "check");
  b.in_ports["A"] = BrickInPort{c, w, 0, false};
  b.in_ports["B"] = BrickInPort{c, -w, 0, false};
  b.in_ports["probe"] = BrickInPort{c, threshold - 1, std::nullopt, false};
  b.out_ports["gt"] = BrickOutPort{c, k, {}};
  return b;
}

namespace detail {

// NOT(B) -> adder(A, .) -> carry check on the adder's carry line. Expects
// `a_src`/`b_src` as out-port refs (or "" to bind externals directly).
inline void wire_inequality(Scaffold& sc, int k, const std::string& a_from,
                            const std::string& b_from) {
  sc.add_brick("inv", build_not(LeakMode::additive));
  sc.add_brick("add", build_adder());
  if (a_from.empty()) {
    sc.bind_input("A", "add.A");
    sc.bind_input("B", "inv.X");
  } else {
    sc.connect(a_from, "add.A");
    sc.connect(b_from, "inv.X");
  }
  sc.connect("inv.notX", "add.B");
  const ScaffoldOffsets off = sc.offsets();
  const int carry_arrival = off.out_spike.at("add.C") + 1;
  sc.add_brick("chk", build_carry_check(k - 1, carry_arrival));
  sc.connect("add.C", "chk.S");
}

}  // namespace detail

inline CircuitPlan make_inequality(int k, IneqVariant variant) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  if (variant == IneqVariant::arithmetic) {
    Scaffold sc;
    detail::wire_inequality(sc, k, "", "");
    sc.bind_output("gt", "chk.gt");
    CircuitPlan plan{"inequality", sc.lower(), {"A", "B"}, "gt", {}, 0};
    for (const std::string& op : plan.operands)
      detail::set_port(plan.lowered, op, k);
    detail::set_port(plan.lowered, "gt", 1);
    plan.horizon = plan.lowered.schedule.at("gt").offset + 3;
    return plan;
  }
  Scaffold sc;
  sc.add_brick("ineq", build_inequality_decay(k));
  sc.bind_input("A", "ineq.A");
  sc.bind_input("B", "ineq.B");
  sc.bind_input("probe", "ineq.probe");
  sc.bind_output("gt", "ineq.gt");
  CircuitPlan plan{"inequality", sc.lower(), {"A", "B"}, "gt", {}, 0};
  detail::set_port(plan.lowered, "A", k);
  detail::set_port(plan.lowered, "B", k);
  detail::set_port(plan.lowered, "gt", 1);
  // probe lands k steps after bit 0, one step after the last operand bit
  plan.aux.push_back(AuxSpike{"probe", k});
  plan.horizon = plan.lowered.schedule.at("gt").offset + 3;
  return plan;
}

// The full comparator as a reusable brick.
inline Brick build_inequality(int k, IneqVariant variant) {
  if (variant == IneqVariant::decay) return build_inequality_decay(k);
  Scaffold sc;
  detail::wire_inequality(sc, k, "", "");
  sc.bind_output("gt", "chk.gt");
  return as_brick(sc.lower());
}

inline CircuitPlan make_mux(int k) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  Scaffold sc;
  sc.add_brick("mux", build_mux());
  sc.bind_input("A", "mux.A");
  sc.bind_input("B", "mux.B");
  sc.bind_input("select", "mux.select");
  sc.bind_input("stop", "mux.stop");
  sc.bind_output("out", "mux.out");
  CircuitPlan plan{"mux", sc.lower(), {"A", "B", "select"}, "out", {}, 0};
  detail::set_port(plan.lowered, "A", k);
  detail::set_port(plan.lowered, "B", k);
  detail::set_port(plan.lowered, "select", 1);
  detail::set_port(plan.lowered, "stop", 1);
  detail::set_port(plan.lowered, "out", k);
  // ends the select burst after exactly k spikes
  plan.aux.push_back(AuxSpike{"stop", k});
  plan.horizon = plan.lowered.schedule.at("out").offset + k + 2;
  return plan;
}

namespace detail {

inline Scaffold minmax_scaffold(int k, MinMaxMode mode) {
  Scaffold sc;
  sc.add_brick("asrc", build_relay());
  sc.add_brick("bsrc", build_relay());
  sc.bind_input("A", "asrc.X");
  sc.bind_input("B", "bsrc.X");
  wire_inequality(sc, k, "asrc.Y", "bsrc.Y");
  sc.add_brick("mux", build_mux());
  sc.connect("chk.gt", "mux.select");
  // quiet select passes the mux A port; gt firing means A > B
  if (mode == MinMaxMode::max) {
    sc.connect("bsrc.Y", "mux.A");  // A <= B: max is B
    sc.connect("asrc.Y", "mux.B");  // A > B: max is A
  } else {
    sc.connect("asrc.Y", "mux.A");  // A <= B: min is A
    sc.connect("bsrc.Y", "mux.B");  // A > B: min is B
  }
  const ScaffoldOffsets off = sc.offsets();
  const int select_arrival = off.in_arrival.at("mux.select");
  sc.add_brick("stop", build_one_shot(select_arrival + k - 1, "stop"));
  sc.connect("stop.spike", "mux.stop");
  sc.bind_output("out", "mux.out");
  return sc;
}

}  // namespace detail

inline CircuitPlan make_minmax(int k, MinMaxMode mode) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  Scaffold sc = detail::minmax_scaffold(k, mode);
  CircuitPlan plan{mode == MinMaxMode::max ? "max" : "min", sc.lower(),
                   {"A", "B"}, "out", {}, 0};
  detail::finish(plan, k);
  return plan;
}

inline Brick build_minmax(int k, MinMaxMode mode) {
  Scaffold sc = detail::minmax_scaffold(k, mode);
  return as_brick(sc.lower());
}

namespace detail {

// A - B = A + (inv(B) + 1) in two's complement. B is inverted over a k+1
// window (the inverter's own trailing one supplies bit k), a one-shot adds
// the +1 at the LSB, and a second adder folds in the delay-matched A.
inline Scaffold subtractor_scaffold() {
  Scaffold sc;
  sc.add_brick("inv", build_not(LeakMode::additive));
  sc.add_brick("neg", build_adder());
  sc.add_brick("add", build_adder());
  sc.bind_input("B", "inv.X");
  sc.connect("inv.notX", "neg.B");
  ScaffoldOffsets off = sc.offsets();
  sc.add_brick("one", build_one_shot(off.in_arrival.at("neg.B") - 1, "one"));
  sc.connect("one.spike", "neg.A");
  sc.connect("neg.S", "add.B");
  sc.bind_input("A", "add.A");
  sc.bind_output("D", "add.S");
  return sc;
}

}  // namespace detail

inline CircuitPlan make_subtractor(int k) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  Scaffold sc = detail::subtractor_scaffold();
  CircuitPlan plan{"subtractor", sc.lower(), {"A", "B"}, "D", {}, 0};
  detail::set_port(plan.lowered, "A", k);
  detail::set_port(plan.lowered, "B", k);
  detail::finish(plan, k, Signedness::twos_complement, k + 1);
  return plan;
}

inline Brick build_subtractor(int) {
  return as_brick(detail::subtractor_scaffold().lower());
}

namespace detail {

// Chains adders over shifted copies of already-placed source streams.
// sources are (out-port ref, shift) pairs; returns the final out-port ref.
inline std::string accumulate(Scaffold& sc,
                              const std::vector<std::pair<std::string, int>>&
                                  sources) {
  std::string acc = sources[0].first;
  int acc_shift = sources[0].second;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    const std::string name = "acc" + std::to_string(i - 1);
    sc.add_brick(name, build_adder());
    sc.connect(acc, name + ".A", acc_shift);
    sc.connect(sources[i].first, name + ".B", sources[i].second);
    acc = name + ".S";
    acc_shift = 0;
  }
  return acc;
}

inline Scaffold scalar_scaffold(std::int64_t a, int k) {
  Scaffold sc;
  if (a == 0) {
    sc.add_brick("zero", build_silent());
    sc.bind_input("X", "zero.X");
    sc.bind_output("Y", "zero.Y");
    return sc;
  }
  std::vector<int> bits;
  for (int p = 0; p < 62; ++p)
    if ((a >> p) & 1) bits.push_back(p);
  if (bits.size() == 1) {
    if (bits[0] == 0) {
      sc.add_brick("id", build_relay());
      sc.bind_input("X", "id.X");
      sc.bind_output("Y", "id.Y");
    } else {
      // a power of two is a pure temporal shift
      sc.add_brick("xin", build_relay());
      sc.add_brick("xout", build_relay());
      sc.bind_input("X", "xin.X");
      sc.connect("xin.Y", "xout.X", bits[0]);
      sc.bind_output("Y", "xout.Y");
    }
    return sc;
  }
  sc.add_brick("xsrc", build_relay());
  sc.bind_input("X", "xsrc.X");
  std::vector<std::pair<std::string, int>> sources;
  for (int p : bits) sources.emplace_back("xsrc.Y", p);
  sc.bind_output("Y", detail::accumulate(sc, sources));
  (void)k;
  return sc;
}

}  // namespace detail

inline CircuitPlan make_scalar_mult(std::int64_t a, int k) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  if (a < 0) throw std::invalid_argument("scalar must be >= 0");
  Scaffold sc = detail::scalar_scaffold(a, k);
  CircuitPlan plan{"scalar_mult", sc.lower(), {"X"}, "Y", {}, 0};
  detail::set_port(plan.lowered, "X", k);
  const int out_width = std::max(1, k + bit_length(a));
  // positions above the declared offset carry the shift, so the decode
  // window starts at the stream origin regardless of a's set bits
  detail::finish(plan, k, Signedness::unsigned_int, out_width);
  return plan;
}

inline Brick build_scalar_mult(std::int64_t a, int k) {
  return as_brick(detail::scalar_scaffold(a, k).lower());
}

namespace detail {

// X * Y as k gated shift-add stages. Stage i latches on when Y's bit i
// coincides with a per-stage one-shot, then its gate passes the i-shifted
// copy of X into the adder chain; a final one-shot clears every latch once
// the last partial product has streamed through.
inline Scaffold variable_mult_scaffold(int k) {
  Scaffold sc;
  sc.add_brick("xsrc", build_relay());
  sc.add_brick("ysrc", build_relay());
  sc.bind_input("X", "xsrc.X");
  sc.bind_input("Y", "ysrc.X");
  sc.add_brick("stop", build_one_shot(2 * k, "stop"));
  std::vector<std::pair<std::string, int>> partials;
  for (int i = 0; i < k; ++i) {
    const std::string t = "t" + std::to_string(i);
    const std::string l = "l" + std::to_string(i);
    const std::string g = "g" + std::to_string(i);
    sc.add_brick(t, build_one_shot(1 + i, "set"));
    sc.add_brick(l, build_latch());
    sc.connect("ysrc.Y", l + ".set_a");
    sc.connect(t + ".spike", l + ".set_b");
    sc.connect("stop.spike", l + ".stop");
    sc.add_brick(g, build_gate());
    sc.connect("xsrc.Y", g + ".stream", i, 1);
    sc.connect(l + ".q", g + ".enable");
    partials.emplace_back(g + ".out", 0);
  }
  sc.bind_output("P", k == 1 ? "g0.out" : detail::accumulate(sc, partials));
  return sc;
}

}  // namespace detail

inline CircuitPlan make_variable_mult(int k) {
  if (k < 1) throw std::invalid_argument("width must be >= 1");
  Scaffold sc = detail::variable_mult_scaffold(k);
  CircuitPlan plan{"variable_mult", sc.lower(), {"X", "Y"}, "P", {}, 0};
  detail::set_port(plan.lowered, "X", k);
  detail::set_port(plan.lowered, "Y", k);
  detail::finish(plan, k, Signedness::unsigned_int, 2 * k);
  return plan;
}

inline Brick build_variable_mult(int k) {
  return as_brick(detail::variable_mult_scaffold(k).lower());
}

// Runs a plan on concrete operand values and decodes the output.
inline std::int64_t run_plan(const CircuitPlan& plan,
                             const std::map<std::string, std::int64_t>& values,
                             Raster* out_raster = nullptr) {
  std::map<std::string, std::vector<int>> inputs;
  for (const std::string& op : plan.operands) {
    auto it = values.find(op);
    if (it == values.end())
      throw std::invalid_argument("missing operand: " + op);
    const PortSchedule& ps = plan.lowered.schedule.at(op);
    inputs[op] = encode(it->second, ps.width, 0, ps.signedness);
  }
  for (const AuxSpike& aux : plan.aux) inputs[aux.port].push_back(aux.time);
  Raster raster = run(plan.lowered.net, inputs, plan.horizon);
  const PortSchedule& out = plan.lowered.schedule.at(plan.output);
  const std::int64_t decoded =
      decode(raster, plan.lowered.net.output_taps.at(plan.output), out.offset,
             out.width, out.signedness);
  if (out_raster) *out_raster = std::move(raster);
  return decoded;
}

}  // namespace spikebit
