// Copyright 2026 the spikebit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spikebit/network.hpp"
#include "spikebit/bitstream.hpp"
#include "spikebit/brick.hpp"
#include "spikebit/bricks.hpp"
#include "spikebit/scaffold.hpp"
#include "spikebit/circuits.hpp"
#include "spikebit/oracle.hpp"
#include "spikebit/sweep.hpp"
#include "spikebit/netlist_io.hpp"
