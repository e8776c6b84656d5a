#pragma once

#include <cstdint>
#include <span>

namespace entrss {

// Active repair times (hours) for an airborne communication transceiver;
// 45 observations.
std::span<const double> repair_times();

// FNV-1a digest of the canonical one-decimal comma-joined text form; checked
// before real-data runs.
inline constexpr std::uint64_t kRepairTimesDigest = 0x8b486551a7ed942eULL;
std::uint64_t repair_times_digest();

}  // namespace entrss
