// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0
//
// bitstream.hpp - conversion between integers and little-endian temporal
// binary spike trains. Bit t of a value maps to a spike at timestep
// offset + t; bits stream least significant first. A k-bit value occupies
// exactly k timesteps on one neuron.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spikebit/network.hpp"

namespace spikebit {

enum class Signedness { unsigned_int, twos_complement };

inline std::uint64_t bit_mask(int width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

inline void check_range(std::int64_t value, int width, Signedness sign) {
  if (width < 1 || width > 62) throw std::invalid_argument("width out of range");
  if (sign == Signedness::unsigned_int) {
    if (value < 0 || value >= (std::int64_t{1} << width))
      throw std::out_of_range("value does not fit unsigned width");
  } else {
    const std::int64_t half = std::int64_t{1} << (width - 1);
    if (value < -half || value >= half)
      throw std::out_of_range("value does not fit two's-complement width");
  }
}

// Spike times for `value` as a width-bit stream whose LSB lands at `offset`.
inline std::vector<int> encode(std::int64_t value, int width, int offset,
                               Signedness sign = Signedness::unsigned_int) {
  check_range(value, width, sign);
  if (offset < 0) throw std::invalid_argument("offset must be >= 0");
  const std::uint64_t pattern =
      static_cast<std::uint64_t>(value) & bit_mask(width);
  std::vector<int> spikes;
  for (int t = 0; t < width; ++t)
    if ((pattern >> t) & 1u) spikes.push_back(offset + t);
  return spikes;
}

// Inverse of encode. Spikes outside [offset, offset + width) are ignored;
// missing spikes decode as 0-bits.
inline std::int64_t decode(const std::vector<int>& spikes, int offset,
                           int width,
                           Signedness sign = Signedness::unsigned_int) {
  if (width < 1 || width > 62) throw std::invalid_argument("width out of range");
  std::uint64_t pattern = 0;
  for (int t : spikes) {
    const int rel = t - offset;
    if (rel >= 0 && rel < width) pattern |= std::uint64_t{1} << rel;
  }
  if (sign == Signedness::twos_complement && (pattern >> (width - 1)) & 1u)
    return static_cast<std::int64_t>(pattern) - (std::int64_t{1} << width);
  return static_cast<std::int64_t>(pattern);
}

inline std::int64_t decode(const Raster& raster, int neuron, int offset,
                           int width,
                           Signedness sign = Signedness::unsigned_int) {
  if (raster.horizon < offset + width)
    throw std::invalid_argument("raster horizon shorter than decode window");
  return decode(raster.times(neuron), offset, width, sign);
}

struct BitStream {
  std::int64_t value = 0;
  int width = 1;
  int offset = 0;
  Signedness signedness = Signedness::unsigned_int;

  std::vector<int> spikes() const {
    return encode(value, width, offset, signedness);
  }
};

// Widens an unsigned stream by one high zero bit (one extra timestep); the
// decoded value is unchanged. Overflowing circuit outputs become readable by
// decoding one position wider.
inline BitStream extend(const BitStream& s) {
  if (s.signedness != Signedness::unsigned_int)
    throw std::invalid_argument("extend applies to unsigned streams");
  return BitStream{s.value, s.width + 1, s.offset, s.signedness};
}

}  // namespace spikebit
