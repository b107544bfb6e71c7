#include <doctest.h>

#include <random>

#include "spikebit/bitstream.hpp"

using namespace spikebit;

TEST_CASE("encode places bits least significant first") {
  CHECK(encode(5, 4, 0) == std::vector<int>{0, 2});
  CHECK(encode(0, 4, 0) == std::vector<int>{});
  CHECK(encode(-2, 4, 3, Signedness::twos_complement) ==
        std::vector<int>{4, 5, 6});
}

TEST_CASE("decode inverts encode and ignores out-of-window spikes") {
  CHECK(decode({0, 2}, 0, 4) == 5);
  CHECK(decode({}, 3, 6) == 0);
  CHECK(decode({4, 5, 6}, 3, 4, Signedness::twos_complement) == -2);
  CHECK(decode({0, 2, 9, 17}, 0, 4) == 5);  // 9 and 17 fall outside
}

TEST_CASE("encode rejects out-of-range values") {
  CHECK_THROWS_AS(encode(16, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(encode(-1, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(encode(8, 4, 0, Signedness::twos_complement),
                  std::out_of_range);
  CHECK_THROWS_AS(encode(-9, 4, 0, Signedness::twos_complement),
                  std::out_of_range);
}

TEST_CASE("round trip is exact for k <= 8 and sampled up to 16") {
  for (int k = 1; k <= 8; ++k) {
    for (std::int64_t v = 0; v < (std::int64_t{1} << k); ++v)
      CHECK(decode(encode(v, k, 0), 0, k) == v);
    const std::int64_t half = std::int64_t{1} << (k - 1);
    for (std::int64_t v = -half; v < half; ++v)
      CHECK(decode(encode(v, k, 0, Signedness::twos_complement), 0, k,
                   Signedness::twos_complement) == v);
  }
  std::mt19937_64 rng(7);
  for (int k = 9; k <= 16; ++k) {
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t v =
          static_cast<std::int64_t>(rng() % (std::uint64_t{1} << k));
      CHECK(decode(encode(v, k, 0), 0, k) == v);
    }
  }
}

TEST_CASE("shifting the offset shifts every spike and nothing else") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + static_cast<int>(rng() % 10);
    const std::int64_t v =
        static_cast<std::int64_t>(rng() % (std::uint64_t{1} << k));
    const int d = static_cast<int>(rng() % 20);
    auto base = encode(v, k, 0);
    auto shifted = encode(v, k, d);
    REQUIRE(base.size() == shifted.size());
    for (std::size_t j = 0; j < base.size(); ++j)
      CHECK(shifted[j] == base[j] + d);
    CHECK(decode(shifted, d, k) == v);
  }
}

TEST_CASE("a one-step delay doubles the decoded value") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + static_cast<int>(rng() % 10);
    const std::int64_t v =
        static_cast<std::int64_t>(rng() % (std::uint64_t{1} << k));
    std::vector<int> delayed;
    for (int t : encode(v, k, 0)) delayed.push_back(t + 1);
    CHECK(decode(delayed, 0, k + 1) == 2 * v);
  }
}

TEST_CASE("widening by a zero bit preserves the value") {
  CHECK(decode(encode(7, 3, 0), 0, 4) == 7);
  CHECK(decode(encode(5, 4, 0), 0, 8) == 5);
  BitStream s{7, 3, 0, Signedness::unsigned_int};
  BitStream wide = extend(s);
  CHECK(wide.width == 4);
  CHECK(decode(wide.spikes(), wide.offset, wide.width) == 7);
  CHECK_THROWS_AS(extend(BitStream{-1, 3, 0, Signedness::twos_complement}),
                  std::invalid_argument);
}
