// Umbrella header for the PAC coding library.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pac/channel.hpp"
#include "pac/convolution.hpp"
#include "pac/fast_decoder.hpp"
#include "pac/latency.hpp"
#include "pac/list_decoder.hpp"
#include "pac/node_plan.hpp"
#include "pac/polar.hpp"
#include "pac/rate_profile.hpp"
#include "pac/sc_kernel.hpp"
#include "pac/simulate.hpp"
#include "pac/types.hpp"
