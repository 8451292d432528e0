#ifndef XRPNDN_METRICS_OPTIONS_HPP
#define XRPNDN_METRICS_OPTIONS_HPP

#include "xrpndn/common.hpp"

#include <optional>
#include <string>

namespace xrpndn::metrics {

struct MetricsOptions
{
  /// node whose arrivals feed M3; defaults to the first validator
  std::optional<std::string> observer;
  std::size_t rollingWindow = 20;
  Duration bitrateWindow = std::chrono::minutes(5);
  Duration packetWindow = std::chrono::minutes(10);
  /// width of the inter-arrival histogram bins, seconds
  double histogramBinWidth = 0.05;

  /// Throws std::invalid_argument naming the offending field.
  void
  validate() const;
};

} // namespace xrpndn::metrics

#endif // XRPNDN_METRICS_OPTIONS_HPP
