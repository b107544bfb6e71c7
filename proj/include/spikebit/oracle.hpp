// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// oracle.hpp - plain integer reference semantics for every library circuit.
// Deliberately self-contained: nothing here touches the simulator or the
// brick builders, so a sweep compares two independent computations.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace spikebit::oracle {

inline std::uint64_t mask(int k) {
  if (k < 1 || k > 62) throw std::invalid_argument("width out of range");
  return (std::uint64_t{1} << k) - 1;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) { return a + b; }

inline std::int64_t invert(std::int64_t x, int k) {
  return static_cast<std::int64_t>(~static_cast<std::uint64_t>(x) & mask(k));
}

inline bool greater(std::int64_t a, std::int64_t b) { return a > b; }

// Ones'-complement route: the end-around carry of A + inv(B) over k bits.
inline bool greater_via_ones_complement(std::int64_t a, std::int64_t b,
                                        int k) {
  const std::int64_t sum = a + invert(b, k);
  return sum >= (std::int64_t{1} << k);
}

inline std::int64_t min_of(std::int64_t a, std::int64_t b) {
  return a < b ? a : b;
}
inline std::int64_t max_of(std::int64_t a, std::int64_t b) {
  return a > b ? a : b;
}

inline std::int64_t subtract(std::int64_t a, std::int64_t b) { return a - b; }

inline std::int64_t scalar_mult(std::int64_t a, std::int64_t x) {
  return a * x;
}

inline std::int64_t multiply(std::int64_t x, std::int64_t y) { return x * y; }

}  // namespace spikebit::oracle
