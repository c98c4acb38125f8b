#pragma once

#include <cstdint>

namespace vsp {

// Reproducibility contract: every random quantity in this project is derived
// from std::mt19937_64 plus the two helpers below. All three are fully
// specified bit-for-bit, so identical seeds give identical scenarios on any
// platform. Fixed forever; fixtures depend on it.

/// splitmix64 step: advances the state and returns the next output.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Deterministic child seed for labels (a, b) under a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

/// Maps one 64-bit draw to a uniform double in [lo, hi) through the usual
/// 53-bit mantissa path. Collapsed ranges (lo == hi) yield exactly lo.
double uniform_in_range(std::uint64_t bits, double lo, double hi);

}  // namespace vsp
