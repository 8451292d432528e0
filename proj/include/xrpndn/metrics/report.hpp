#ifndef XRPNDN_METRICS_REPORT_HPP
#define XRPNDN_METRICS_REPORT_HPP

#include "xrpndn/metrics/options.hpp"
#include "xrpndn/metrics/stats.hpp"
#include "xrpndn/ndn/content-store.hpp"
#include "xrpndn/sim/event-log.hpp"
#include "xrpndn/xrpl/validator.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace xrpndn::metrics {

/// observer -> producer -> first-copy arrival times, in log order
using ArrivalSeries = std::map<std::string, std::map<std::string, std::vector<TimePoint>>>;

ArrivalSeries
arrivalSeries(const sim::EventLog& log);

/// Validation counters per node, rebuilt from the application records of the log.
std::map<std::string, xrpl::ValidatorCounters>
nodeCounters(const sim::EventLog& log);

/// (validations in + validations out) / ledgers created. Throws on zero ledgers.
double
valsPerLedger(const xrpl::ValidatorCounters& counters);

struct NicCounters
{
  std::uint64_t bytes = 0;
  std::uint64_t packets = 0;
  double avgBitrateKbps = 0.0;
};

/// Traffic on all links incident to \p node during [begin, begin + window).
NicCounters
nicCounters(const sim::EventLog& log, const std::string& node, TimePoint begin, Duration window);

struct CsRates
{
  double missesPerMin = 0.0;
  double hitsPerMin = 0.0;
  std::uint64_t entries = 0;
};

/// Throws std::invalid_argument unless duration > 0.
CsRates
csRates(const ndn::CsStats& stats, std::uint64_t entries, Duration duration);

struct SummaryInputs
{
  std::string model;
  std::string topology;
  Duration duration;
  /// node whose first-copy arrivals feed M3
  std::string observer;
  /// node whose NIC traffic is reported
  std::string nicNode;
  MetricsOptions options;
};

/// One row of the experiments summary. Empty optionals are "not collected".
struct MetricsReport
{
  std::string model;
  std::string topology;
  double durationS = 0.0;
  std::string observer;

  std::size_t deltaCount = 0;
  std::optional<double> q25;
  std::optional<double> q50;
  std::optional<double> q75;
  std::optional<double> meanDelta;

  std::optional<double> valsPerLedger;
  std::map<std::string, double> valsPerLedgerByNode;

  std::string nicNode;
  double bitrateWindowS = 0.0;
  double packetWindowS = 0.0;
  std::optional<double> avgBitrateKbps;
  std::optional<std::uint64_t> packets;

  /// absent when no node runs NDN
  std::optional<CsRates> contentStore;

  Histogram histogram;

  static constexpr std::string_view SCHEMA = "xrpndn-summary/1";

  nlohmann::ordered_json
  toJson() const;

  /// Throws std::invalid_argument on schema mismatch or missing fields.
  static MetricsReport
  fromJson(const nlohmann::json& j);
};

/// Assembles the summary purely from the event log.
MetricsReport
summarize(const sim::EventLog& log, const SummaryInputs& in);

/// Aligned text table of one or more rows.
void
writeTable(std::ostream& os, const std::vector<MetricsReport>& rows);

} // namespace xrpndn::metrics

#endif // XRPNDN_METRICS_REPORT_HPP
