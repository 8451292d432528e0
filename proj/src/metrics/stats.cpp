#include "xrpndn/metrics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xrpndn::metrics {

std::vector<double>
interarrivalDeltas(const std::vector<TimePoint>& arrivals)
{
  std::vector<double> out;
  for (std::size_t i = 1; i < arrivals.size(); ++i) {
    out.push_back(toSeconds(arrivals[i] - arrivals[i - 1]));
  }
  return out;
}

std::vector<double>
interarrivalDeltas(const std::vector<double>& arrivalSeconds)
{
  std::vector<double> out;
  for (std::size_t i = 1; i < arrivalSeconds.size(); ++i) {
    out.push_back(arrivalSeconds[i] - arrivalSeconds[i - 1]);
  }
  return out;
}

RollingBand
rollingBand(const std::vector<double>& deltas, std::size_t window)
{
  if (window < 2) {
    throw std::invalid_argument("rolling window must be at least 2");
  }
  RollingBand band;
  band.window = window;
  if (deltas.size() < window) {
    return band;
  }

  std::size_t n = deltas.size() - window + 1;
  band.center.reserve(n);
  band.upper.reserve(n);
  band.lower.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    auto first = deltas.begin() + static_cast<std::ptrdiff_t>(start);
    auto last = first + static_cast<std::ptrdiff_t>(window);
    double m = std::accumulate(first, last, 0.0) / static_cast<double>(window);
    double ss = 0.0;
    for (auto it = first; it != last; ++it) {
      ss += (*it - m) * (*it - m);
    }
    double sd = std::sqrt(ss / static_cast<double>(window - 1));
    band.center.push_back(m);
    band.upper.push_back(m + 2 * sd);
    band.lower.push_back(m - 2 * sd);
  }
  return band;
}

std::vector<double>
quantiles(std::vector<double> values, const std::vector<double>& probs)
{
  if (values.empty()) {
    throw std::invalid_argument("quantiles of an empty sample");
  }
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("quantile probability outside [0, 1]");
    }
    double pos = p * static_cast<double>(values.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    auto hi = std::min(lo + 1, values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    out.push_back(values[lo] + frac * (values[hi] - values[lo]));
  }
  return out;
}

double
mean(const std::vector<double>& values)
{
  if (values.empty()) {
    throw std::invalid_argument("mean of an empty sample");
  }
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

std::uint64_t
Histogram::total() const
{
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

long long
binIndex(double value, double binWidth)
{
  // values sitting on a bin edge up to rounding noise belong to the upper bin
  double q = value / binWidth;
  double nearest = std::round(q);
  if (std::abs(q - nearest) < 1e-9) {
    return static_cast<long long>(nearest);
  }
  return static_cast<long long>(std::floor(q));
}

Histogram
histogram(const std::vector<double>& values, double binWidth)
{
  if (!(binWidth > 0.0)) {
    throw std::invalid_argument("histogram bin width must be positive");
  }
  Histogram h;
  h.binWidth = binWidth;
  if (values.empty()) {
    return h;
  }
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  h.firstBin = binIndex(*lo, binWidth);
  h.counts.assign(static_cast<std::size_t>(binIndex(*hi, binWidth) - h.firstBin + 1), 0);
  for (double v : values) {
    ++h.counts[static_cast<std::size_t>(binIndex(v, binWidth) - h.firstBin)];
  }
  return h;
}

} // namespace xrpndn::metrics
