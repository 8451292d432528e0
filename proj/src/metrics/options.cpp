#include "xrpndn/metrics/options.hpp"

#include <stdexcept>

namespace xrpndn::metrics {

void
MetricsOptions::validate() const
{
  if (rollingWindow < 2) {
    throw std::invalid_argument("metrics.rolling_window: must be at least 2");
  }
  if (bitrateWindow <= Duration::zero()) {
    throw std::invalid_argument("metrics.bitrate_window_s: must be positive");
  }
  if (packetWindow <= Duration::zero()) {
    throw std::invalid_argument("metrics.packet_window_s: must be positive");
  }
  if (!(histogramBinWidth > 0.0)) {
    throw std::invalid_argument("metrics.histogram_bin_s: must be positive");
  }
}

} // namespace xrpndn::metrics
