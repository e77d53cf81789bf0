#pragma once

#include <cstdint>
#include <vector>

#include "ordgroups/properties.hpp"

namespace ordgroups {

/// Sample sizes for the self-test; the defaults finish in a few seconds.
struct SelftestScale {
	int cases = 200;
};

/// Runs every invariant check over Z^2, BS(1,2), BS(1,-1) and F2/F3, plus
/// the fixed profinite checks. Fully determined by `seed`.
std::vector<PropertyReport> run_selftest(std::uint64_t seed, SelftestScale scale = {});

} // namespace ordgroups
