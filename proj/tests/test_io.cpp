#include <doctest.h>

#include "spikebit/circuits.hpp"
#include "spikebit/netlist_io.hpp"

using namespace spikebit;

TEST_CASE("netlist round trip is byte-identical") {
  for (const CircuitPlan& plan :
       {make_adder(3), make_mux(4), make_minmax(3, MinMaxMode::min),
        make_inequality(4, IneqVariant::decay)}) {
    const std::string first = save_netlist(plan.lowered);
    LoweredNetwork loaded = load_netlist(first);
    CHECK(save_netlist(loaded) == first);
  }
}

TEST_CASE("a loaded netlist simulates exactly like the original") {
  CircuitPlan plan = make_subtractor(4);
  LoweredNetwork loaded = load_netlist(save_netlist(plan.lowered));
  for (std::int64_t a : {0, 3, 9, 15})
    for (std::int64_t b : {0, 5, 15}) {
      const std::map<std::string, std::vector<int>> in{
          {"A", encode(a, 4, 0)}, {"B", encode(b, 4, 0)}};
      Raster ra = run(plan.lowered.net, in, plan.horizon);
      Raster rb = run(loaded.net, in, plan.horizon);
      CHECK(ra.events == rb.events);
    }
}

TEST_CASE("mux netlist carries exactly four neuron records plus taps") {
  CircuitPlan plan = make_mux(4);
  ordered_json j = ordered_json::parse(save_netlist(plan.lowered));
  CHECK(j.at("neurons").size() == 4);
  CHECK(j.at("inputs").size() == 4);  // A, B, select, stop
  CHECK(j.at("outputs").size() == 1);
}

TEST_CASE("raster csv is versioned and ordered by time then id") {
  Raster r;
  r.horizon = 5;
  r.events = {{0, 2}, {1, 0}, {1, 3}, {4, 1}};
  const std::string csv = raster_csv(r);
  CHECK(csv == "# spikebit-raster v1\ntime,neuron\n0,2\n1,0\n1,3\n4,1\n");
}

TEST_CASE("dot export names the hidden adder nodes and the carry edges") {
  CircuitPlan plan = make_adder(3);
  const std::string dot = write_dot(plan.lowered, "adder");
  CHECK(dot.find("add.t1") != std::string::npos);
  CHECK(dot.find("add.t2") != std::string::npos);
  CHECK(dot.find("add.t3") != std::string::npos);
  // carry feedback from t2 reaches back into the hidden layer
  const int t1 = plan.lowered.net.find_label(".t1");
  const int t2 = plan.lowered.net.find_label(".t2");
  const int t3 = plan.lowered.net.find_label(".t3");
  const std::string e1 =
      "n" + std::to_string(t2) + " -> n" + std::to_string(t1);
  const std::string e3 =
      "n" + std::to_string(t2) + " -> n" + std::to_string(t3);
  CHECK(dot.find(e1) != std::string::npos);
  CHECK(dot.find(e3) != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("sweep reports serialize with their verdicts") {
  SweepSpec spec;
  spec.circuit = CircuitKind::adder;
  spec.widths = {2};
  const std::string j = report_json(run_sweep(spec));
  CHECK(j.find("\"total_failures\": 0") != std::string::npos);
  CHECK(j.find("spikebit-report") != std::string::npos);
}
