// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// sweep.hpp - the differential test driver: builds a circuit, runs it over
// exhaustive or seeded-random operand sets, and compares every decoded
// output against the integer oracle. Any mismatch is a failure; the first
// one is reported with its full raster.
//
// Exhaustive mode is capped at k = 8 (65,536 pairs per binary circuit);
// randomized mode covers widths up to 16 with a reproducible generator.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spikebit/circuits.hpp"
#include "spikebit/oracle.hpp"

namespace spikebit {

enum class CircuitKind {
  adder,
  not_gate,
  inequality,
  mux,
  minmax,
  subtractor,
  scalar_mult,
  variable_mult,
};

enum class SweepMode { exhaustive, randomized };

// Documented single-parameter faults used for mutation-sensitivity checks.
enum class Mutation { none, adder_t2_threshold, mux_select_self };

struct SweepSpec {
  CircuitKind circuit = CircuitKind::adder;
  std::vector<int> widths;
  SweepMode mode = SweepMode::exhaustive;
  int samples = 1000;
  std::uint64_t seed = 0x5b175eedULL;
  LeakMode leak = LeakMode::additive;          // not_gate
  IneqVariant variant = IneqVariant::arithmetic;  // inequality
  MinMaxMode minmax_mode = MinMaxMode::max;    // minmax
  Mutation mutation = Mutation::none;
};

struct Counterexample {
  std::map<std::string, std::int64_t> operands;
  std::int64_t expected = 0;
  std::int64_t got = 0;
  int width = 0;
  std::string raster;  // CSV dump of the failing run
};

struct WidthResult {
  int width = 0;
  long cases = 0;
  long failures = 0;
  std::optional<Counterexample> first_failure;
};

struct SweepReport {
  std::string circuit;
  std::string mode;
  std::uint64_t seed = 0;
  std::vector<WidthResult> widths;
  long total_cases = 0;
  long total_failures = 0;
  int neuron_count = 0;  // at the largest width swept

  bool ok() const { return total_failures == 0; }

  std::string text() const {
    std::ostringstream os;
    os << "sweep " << circuit << " (" << mode << ")\n";
    for (const WidthResult& w : widths) {
      os << "  k=" << w.width << ": " << w.cases << " cases, " << w.failures
         << " failures\n";
      if (w.first_failure) {
        os << "    first counterexample:";
        for (const auto& [name, v] : w.first_failure->operands)
          os << ' ' << name << '=' << v;
        os << " expected=" << w.first_failure->expected
           << " got=" << w.first_failure->got << '\n';
      }
    }
    os << "  total: " << total_cases << " cases, " << total_failures
       << " failures, " << neuron_count << " neurons\n";
    return os.str();
  }
};

inline const char* circuit_name(CircuitKind k) {
  switch (k) {
    case CircuitKind::adder: return "adder";
    case CircuitKind::not_gate: return "not";
    case CircuitKind::inequality: return "inequality";
    case CircuitKind::mux: return "mux";
    case CircuitKind::minmax: return "minmax";
    case CircuitKind::subtractor: return "subtractor";
    case CircuitKind::scalar_mult: return "scalar_mult";
    case CircuitKind::variable_mult: return "variable_mult";
  }
  return "?";
}

inline void apply_mutation(Network& net, Mutation m) {
  if (m == Mutation::none) return;
  if (m == Mutation::adder_t2_threshold) {
    const int id = net.find_label(".t2");
    if (id < 0) throw config_error("no adder t2 neuron to mutate");
    net.neurons[id].threshold = 3 * unit();
    return;
  }
  const int id = net.find_label(".select");
  if (id < 0) throw config_error("no mux select neuron to mutate");
  for (Synapse& s : net.synapses)
    if (s.pre == id && s.post == id) s.weight = 0;
}

namespace detail {

struct Case {
  std::map<std::string, std::int64_t> operands;
  std::int64_t expected = 0;
};

// Deterministic uniform draw from [0, 2^k); modulo bias is irrelevant here
// and mt19937_64 output is pinned by the standard.
inline std::int64_t draw(std::mt19937_64& rng, int k) {
  return static_cast<std::int64_t>(rng() % (std::uint64_t{1} << k));
}

inline std::string raster_dump(const Raster& r, const Network& net) {
  std::ostringstream os;
  for (const auto& [t, id] : r.events) {
    os << t << ',' << id;
    const std::string l = net.label(id);
    if (!l.empty()) os << ',' << l;
    os << '\n';
  }
  return os.str();
}

}  // namespace detail

inline SweepReport run_sweep(const SweepSpec& spec) {
  if (spec.widths.empty()) throw std::invalid_argument("no widths given");
  SweepReport report;
  report.circuit = circuit_name(spec.circuit);
  report.mode = spec.mode == SweepMode::exhaustive ? "exhaustive" : "randomized";
  report.seed = spec.seed;

  for (int k : spec.widths) {
    if (k < 1 || k > 16) throw std::invalid_argument("width out of range");
    if (spec.mode == SweepMode::exhaustive && k > 8)
      throw std::invalid_argument("exhaustive sweeps are limited to k <= 8");

    // enumerate operand tuples and expected values
    std::vector<detail::Case> cases;
    auto pair_space = [&](auto&& expect) {
      if (spec.mode == SweepMode::exhaustive) {
        for (std::int64_t a = 0; a < (std::int64_t{1} << k); ++a)
          for (std::int64_t b = 0; b < (std::int64_t{1} << k); ++b)
            cases.push_back(expect(a, b));
      } else {
        std::mt19937_64 rng(spec.seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
        for (int i = 0; i < spec.samples; ++i) {
          const std::int64_t a = detail::draw(rng, k);
          const std::int64_t b = detail::draw(rng, k);
          cases.push_back(expect(a, b));
        }
      }
    };

    CircuitPlan plan{"", {}, {}, "", {}, 0};
    switch (spec.circuit) {
      case CircuitKind::adder:
        plan = make_adder(k);
        pair_space([&](std::int64_t a, std::int64_t b) {
          return detail::Case{{{"A", a}, {"B", b}}, oracle::add(a, b)};
        });
        break;
      case CircuitKind::not_gate:
        plan = make_not(k, spec.leak);
        if (spec.mode == SweepMode::exhaustive) {
          for (std::int64_t x = 0; x < (std::int64_t{1} << k); ++x)
            cases.push_back({{{"X", x}}, oracle::invert(x, k)});
        } else {
          std::mt19937_64 rng(spec.seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
          for (int i = 0; i < spec.samples; ++i) {
            const std::int64_t x = detail::draw(rng, k);
            cases.push_back({{{"X", x}}, oracle::invert(x, k)});
          }
        }
        break;
      case CircuitKind::inequality:
        plan = make_inequality(k, spec.variant);
        pair_space([&](std::int64_t a, std::int64_t b) {
          return detail::Case{{{"A", a}, {"B", b}},
                              oracle::greater(a, b) ? 1 : 0};
        });
        break;
      case CircuitKind::mux:
        plan = make_mux(k);
        if (spec.mode == SweepMode::exhaustive) {
          for (std::int64_t sel = 0; sel <= 1; ++sel)
            for (std::int64_t a = 0; a < (std::int64_t{1} << k); ++a)
              for (std::int64_t b = 0; b < (std::int64_t{1} << k); ++b)
                cases.push_back({{{"A", a}, {"B", b}, {"select", sel}},
                                 sel ? b : a});
        } else {
          std::mt19937_64 rng(spec.seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
          for (int i = 0; i < spec.samples; ++i) {
            const std::int64_t a = detail::draw(rng, k);
            const std::int64_t b = detail::draw(rng, k);
            const std::int64_t sel = static_cast<std::int64_t>(rng() & 1);
            cases.push_back({{{"A", a}, {"B", b}, {"select", sel}},
                             sel ? b : a});
          }
        }
        break;
      case CircuitKind::minmax:
        plan = make_minmax(k, spec.minmax_mode);
        pair_space([&](std::int64_t a, std::int64_t b) {
          return detail::Case{{{"A", a}, {"B", b}},
                              spec.minmax_mode == MinMaxMode::max
                                  ? oracle::max_of(a, b)
                                  : oracle::min_of(a, b)};
        });
        break;
      case CircuitKind::subtractor:
        plan = make_subtractor(k);
        pair_space([&](std::int64_t a, std::int64_t b) {
          return detail::Case{{{"A", a}, {"B", b}}, oracle::subtract(a, b)};
        });
        break;
      case CircuitKind::scalar_mult:
        // scanned separately below; plan depends on the scalar
        break;
      case CircuitKind::variable_mult:
        plan = make_variable_mult(k);
        pair_space([&](std::int64_t x, std::int64_t y) {
          return detail::Case{{{"X", x}, {"Y", y}}, oracle::multiply(x, y)};
        });
        break;
    }

    WidthResult wr;
    wr.width = k;

    if (spec.circuit == CircuitKind::scalar_mult) {
      for (std::int64_t a = 0; a <= 31; ++a) {
        CircuitPlan sp = make_scalar_mult(a, k);
        apply_mutation(sp.lowered.net, spec.mutation);
        report.neuron_count =
            static_cast<int>(sp.lowered.net.neurons.size());
        auto run_case = [&](std::int64_t x) {
          ++wr.cases;
          Raster raster;
          const std::int64_t got = run_plan(sp, {{"X", x}}, &raster);
          if (got != oracle::scalar_mult(a, x)) {
            ++wr.failures;
            if (!wr.first_failure)
              wr.first_failure = Counterexample{
                  {{"a", a}, {"x", x}}, oracle::scalar_mult(a, x), got, k,
                  detail::raster_dump(raster, sp.lowered.net)};
          }
        };
        if (spec.mode == SweepMode::exhaustive) {
          for (std::int64_t x = 0; x < (std::int64_t{1} << k); ++x) run_case(x);
        } else {
          std::mt19937_64 rng(spec.seed ^
                              (0x9e3779b97f4a7c15ULL * (31 * k + a + 1)));
          for (int i = 0; i < spec.samples / 32 + 1; ++i)
            run_case(detail::draw(rng, k));
        }
      }
    } else {
      apply_mutation(plan.lowered.net, spec.mutation);
      report.neuron_count = static_cast<int>(plan.lowered.net.neurons.size());
      for (const detail::Case& c : cases) {
        ++wr.cases;
        Raster raster;
        const std::int64_t got = run_plan(plan, c.operands, &raster);
        if (got != c.expected) {
          ++wr.failures;
          if (!wr.first_failure)
            wr.first_failure =
                Counterexample{c.operands, c.expected, got, k,
                               detail::raster_dump(raster, plan.lowered.net)};
        }
      }
    }

    report.total_cases += wr.cases;
    report.total_failures += wr.failures;
    report.widths.push_back(std::move(wr));
  }
  return report;
}

}  // namespace spikebit
