#pragma once

#include <cstdint>
#include <random>

namespace crofton::mc {

using RandomStream = std::mt19937_64;

/// Name recorded in simulation reports.
inline constexpr const char* kRngName = "mt19937_64 seeded by seed_seq(seed, trial)";

/// Independent stream for one trial. Depends only on (seed, trial), so the
/// result of a trial never depends on which thread ran it.
inline RandomStream trial_stream(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return RandomStream(seq);
}

}  // namespace crofton::mc
