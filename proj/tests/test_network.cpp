#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "spikebit/bitstream.hpp"
#include "spikebit/network.hpp"

using namespace spikebit;

namespace {

// One-neuron TrueNorth-style inverter: leak +1, threshold 1, reset 0,
// driven through an input tap of weight -1.
Network not_gate_network() {
  Network net;
  net.neurons.push_back(
      NeuronConfig{unit(), LeakMode::additive, unit(), 0, 0});
  net.labels.push_back("not");
  net.input_taps["X"] = InputTap{0, -unit(), 1};
  net.output_taps["out"] = 0;
  return net;
}

Network relay_network() {
  Network net;
  net.neurons.push_back(NeuronConfig{unit(), LeakMode::additive, 0, 0, 0});
  net.labels.push_back("relay");
  net.input_taps["X"] = InputTap{0, unit(), 1};
  return net;
}

}  // namespace

TEST_CASE("inverter neuron spikes on quiet steps and stays put on input") {
  Network net = not_gate_network();
  Simulation sim(net);

  // no input: the +1 leak crosses threshold every step
  auto spikes = sim.step();
  CHECK(spikes == std::vector<int>{0});
  CHECK(sim.potential(0) == 0);

  // an input spike cancels the leak exactly; potential unchanged, no spike
  sim.schedule_input("X", sim.now());  // arrives at now+1
  spikes = sim.step();
  CHECK(spikes == std::vector<int>{0});
  spikes = sim.step();  // the -1 arrival lands here
  CHECK(spikes.empty());
  CHECK(sim.potential(0) == 0);
}

TEST_CASE("multiplicative leak halves the stored potential") {
  Network net;
  net.neurons.push_back(NeuronConfig{100 * unit(), LeakMode::multiplicative,
                                     unit() / 2, 0, 4 * unit()});
  Simulation sim(net);
  sim.step();
  CHECK(sim.potential(0) == 2 * unit());
  sim.step();
  CHECK(sim.potential(0) == unit());
}

TEST_CASE("run on an empty network yields an empty raster") {
  Network net;
  Raster r = run(net, {}, 5);
  CHECK(r.events.empty());
  CHECK(r.horizon == 5);
}

TEST_CASE("relay passes input spikes with the unit injection delay") {
  Raster r = run(relay_network(), {{"X", {0, 2}}}, 5);
  CHECK(r.times(0) == std::vector<int>{1, 3});
}

TEST_CASE("run rejects unknown inputs and bad horizons") {
  Network net = relay_network();
  CHECK_THROWS_AS(run(net, {{"nope", {0}}}, 4), config_error);
  CHECK_THROWS_AS(run(net, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(run(net, {{"X", {7}}}, 4), std::invalid_argument);
}

TEST_CASE("network validation rejects malformed blueprints") {
  Network net;
  net.neurons.push_back(NeuronConfig{});
  net.synapses.push_back(Synapse{0, 0, unit(), 0});  // zero delay
  CHECK_THROWS_AS(validate(net), config_error);
  net.synapses[0].delay = 1;
  CHECK_NOTHROW(validate(net));
  net.synapses.push_back(Synapse{0, 3, unit(), 1});  // missing endpoint
  CHECK_THROWS_AS(validate(net), config_error);
  net.synapses.pop_back();
  net.neurons[0].leak_mode = LeakMode::multiplicative;
  net.neurons[0].leak_value = 2 * unit();  // decay factor > 1
  CHECK_THROWS_AS(validate(net), config_error);
}

// Independent 4-step enumeration of the inverter dynamics, written against
// the update rule alone (leak + input, threshold, reset).
TEST_CASE("inverter raster matches a hand-stepped enumeration") {
  const std::vector<int> emissions{0, 2};
  std::vector<int> expected;
  {
    std::int64_t v = 0;
    for (int t = 0; t < 4; ++t) {
      std::int64_t in = 0;
      for (int e : emissions)
        if (e + 1 == t) in -= 1;  // tap delay 1, weight -1
      v += 1 + in;
      if (v >= 1) {
        expected.push_back(t);
        v = 0;
      }
    }
  }
  CHECK(expected == std::vector<int>{0, 2});

  Raster r = run(not_gate_network(), {{"X", emissions}}, 4);
  CHECK(r.times(0) == expected);

  // over the shifted window the output is the bitwise complement
  const std::int64_t in_bits = decode(emissions, 0, 3);
  const std::int64_t out_bits = decode(r.times(0), 1, 3);
  CHECK(out_bits == (~in_bits & 0x7));
}

TEST_CASE("inverter complements every stream exhaustively up to k = 8") {
  for (int k = 1; k <= 8; ++k) {
    for (std::int64_t x = 0; x < (std::int64_t{1} << k); ++x) {
      for (int d : {0, 3}) {
        Raster r = run(not_gate_network(), {{"X", encode(x, k, d)}},
                       d + k + 2);
        CHECK(decode(r.times(0), d + 1, k) ==
              (~x & ((std::int64_t{1} << k) - 1)));
      }
    }
  }
}

TEST_CASE("repeated runs are identical") {
  Network net = not_gate_network();
  Raster a = run(net, {{"X", {0, 2, 5}}}, 10);
  Raster b = run(net, {{"X", {0, 2, 5}}}, 10);
  CHECK(a.events == b.events);
}

TEST_CASE("permuting neuron ids permutes the raster and nothing else") {
  // two-neuron chain with a self-loop, exercised under id swap
  Network net;
  net.neurons.push_back(NeuronConfig{unit(), LeakMode::additive, unit(), 0, 0});
  net.neurons.push_back(NeuronConfig{unit(), LeakMode::additive, 0, 0, 0});
  net.synapses.push_back(Synapse{0, 1, unit(), 2});
  net.synapses.push_back(Synapse{1, 1, -unit(), 1});
  net.input_taps["X"] = InputTap{0, -unit(), 1};

  Network swapped;
  swapped.neurons = {net.neurons[1], net.neurons[0]};
  swapped.synapses.push_back(Synapse{1, 0, unit(), 2});
  swapped.synapses.push_back(Synapse{0, 0, -unit(), 1});
  swapped.input_taps["X"] = InputTap{1, -unit(), 1};

  Raster a = run(net, {{"X", {1, 4}}}, 12);
  Raster b = run(swapped, {{"X", {1, 4}}}, 12);
  std::vector<std::pair<int, int>> mapped;
  for (auto [t, id] : b.events) mapped.emplace_back(t, 1 - id);
  std::sort(mapped.begin(), mapped.end());
  CHECK(a.events == mapped);
}

TEST_CASE("decay keeps the potential magnitude non-increasing") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Network net;
    NeuronConfig cfg;
    cfg.threshold = std::int64_t{1} << 40;  // never fires
    cfg.leak_mode = LeakMode::multiplicative;
    cfg.leak_value = static_cast<std::int64_t>(rng() % (unit() + 1));
    cfg.initial_potential =
        static_cast<std::int64_t>(rng() % 2000) - 1000;
    net.neurons.push_back(cfg);
    Simulation sim(net);
    std::int64_t prev = cfg.initial_potential;
    for (int t = 0; t < 50; ++t) {
      sim.step();
      const std::int64_t v = sim.potential(0);
      CHECK(std::abs(v) <= std::abs(prev));
      prev = v;
    }
  }
}
