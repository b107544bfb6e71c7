#include <doctest.h>

#include "spikebit/netlist_io.hpp"
#include "spikebit/sweep.hpp"

using namespace spikebit;

TEST_CASE("adder sweep is clean at small widths") {
  SweepSpec spec;
  spec.circuit = CircuitKind::adder;
  spec.widths = {1, 2, 3};
  SweepReport r = run_sweep(spec);
  CHECK(r.ok());
  CHECK(r.total_cases == 4 + 16 + 64);
}

TEST_CASE("a mutated adder is caught by the exhaustive k=3 sweep") {
  SweepSpec spec;
  spec.circuit = CircuitKind::adder;
  spec.widths = {3};
  spec.mutation = Mutation::adder_t2_threshold;
  SweepReport r = run_sweep(spec);
  CHECK_FALSE(r.ok());
  CHECK(r.total_failures > 0);
  REQUIRE(r.widths[0].first_failure.has_value());
  CHECK_FALSE(r.widths[0].first_failure->raster.empty());
}

TEST_CASE("a mux with its select self-loop removed fails at k=3") {
  SweepSpec spec;
  spec.circuit = CircuitKind::mux;
  spec.widths = {3};
  spec.mutation = Mutation::mux_select_self;
  SweepReport r = run_sweep(spec);
  CHECK(r.total_failures > 0);
}

TEST_CASE("randomized sweeps reproduce bit-identically from the seed") {
  SweepSpec spec;
  spec.circuit = CircuitKind::subtractor;
  spec.widths = {9, 10};
  spec.mode = SweepMode::randomized;
  spec.samples = 50;
  spec.seed = 1234;
  SweepReport a = run_sweep(spec);
  SweepReport b = run_sweep(spec);
  CHECK(a.ok());
  CHECK(report_json(a) == report_json(b));
}

TEST_CASE("exhaustive sweeps stop at the k = 8 bound") {
  SweepSpec spec;
  spec.circuit = CircuitKind::adder;
  spec.widths = {9};
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("variant verdicts agree through the sweep driver") {
  SweepSpec arith;
  arith.circuit = CircuitKind::inequality;
  arith.widths = {1, 2, 3, 4};
  SweepSpec decay = arith;
  decay.variant = IneqVariant::decay;
  CHECK(run_sweep(arith).ok());
  CHECK(run_sweep(decay).ok());
}

TEST_CASE("randomized wide sweeps hold for the heavier circuits") {
  SweepSpec spec;
  spec.circuit = CircuitKind::variable_mult;
  spec.widths = {6};
  spec.mode = SweepMode::randomized;
  spec.samples = 60;
  CHECK(run_sweep(spec).ok());

  spec.circuit = CircuitKind::minmax;
  spec.widths = {12};
  spec.minmax_mode = MinMaxMode::min;
  CHECK(run_sweep(spec).ok());
}
