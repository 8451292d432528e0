#ifndef XRPNDN_COMMON_HPP
#define XRPNDN_COMMON_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace xrpndn {

/// Simulated time is kept in integer nanoseconds so that periodic schedules
/// stay exact over long runs.
using Duration = std::chrono::nanoseconds;

/// Offset from the start of the simulation.
using TimePoint = std::chrono::nanoseconds;

using NodeId = std::uint32_t;
using FaceId = std::uint32_t;
using LedgerSeq = std::uint64_t;
using Nonce = std::uint64_t;
using Bytes = std::vector<std::uint8_t>;

/// The single deterministic random source of a run.
using Rng = std::mt19937_64;

/// Face through which a node talks to its co-located application.
constexpr FaceId LOCAL_FACE = 0;

constexpr double
toSeconds(Duration d)
{
  return static_cast<double>(d.count()) / 1e9;
}

inline Duration
fromSeconds(double s)
{
  return Duration(static_cast<Duration::rep>(std::llround(s * 1e9)));
}

inline Duration
fromMillis(double ms)
{
  return Duration(static_cast<Duration::rep>(std::llround(ms * 1e6)));
}

} // namespace xrpndn

#endif // XRPNDN_COMMON_HPP
