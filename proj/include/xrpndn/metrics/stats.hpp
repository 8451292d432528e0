#ifndef XRPNDN_METRICS_STATS_HPP
#define XRPNDN_METRICS_STATS_HPP

#include "xrpndn/common.hpp"

#include <stdexcept>
#include <vector>

namespace xrpndn::metrics {

/// Consecutive differences of \p arrivals, in seconds. Fewer than 2 arrivals yield no deltas.
std::vector<double>
interarrivalDeltas(const std::vector<TimePoint>& arrivals);

/// Same as above for arrival times already in seconds.
std::vector<double>
interarrivalDeltas(const std::vector<double>& arrivalSeconds);

/**
 * \brief rm(w) and rm(w) +/- 2 rSTD(w) over a series of deltas.
 *
 * Entry j describes the window ending at delta index j + window - 1;
 * rSTD is the sample (n-1) standard deviation.
 */
struct RollingBand
{
  std::size_t window = 20;
  std::vector<double> center;
  std::vector<double> upper;
  std::vector<double> lower;

  std::size_t
  size() const noexcept
  {
    return center.size();
  }

  bool
  empty() const noexcept
  {
    return center.empty();
  }
};

/// Throws std::invalid_argument if window < 2. Fewer than \p window deltas give an empty band.
RollingBand
rollingBand(const std::vector<double>& deltas, std::size_t window = 20);

/// Linear-interpolation quantiles (position p * (n - 1)). Throws on empty input or p outside [0, 1].
std::vector<double>
quantiles(std::vector<double> values, const std::vector<double>& probs = {0.25, 0.5, 0.75});

double
mean(const std::vector<double>& values);

/// Fixed-width histogram; bin k covers [k * binWidth, (k + 1) * binWidth).
struct Histogram
{
  double binWidth = 0.05;
  long long firstBin = 0;
  std::vector<std::uint64_t> counts;

  double
  binStart(std::size_t i) const
  {
    return static_cast<double>(firstBin + static_cast<long long>(i)) * binWidth;
  }

  std::uint64_t
  total() const;
};

long long
binIndex(double value, double binWidth);

Histogram
histogram(const std::vector<double>& values, double binWidth);

} // namespace xrpndn::metrics

#endif // XRPNDN_METRICS_STATS_HPP
