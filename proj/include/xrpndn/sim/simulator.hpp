#ifndef XRPNDN_SIM_SIMULATOR_HPP
#define XRPNDN_SIM_SIMULATOR_HPP

#include "xrpndn/metrics/encoding.hpp"
#include "xrpndn/metrics/options.hpp"
#include "xrpndn/model/xrpl-app.hpp"
#include "xrpndn/ndn/forwarder.hpp"
#include "xrpndn/sim/event-log.hpp"
#include "xrpndn/sim/scheduler.hpp"
#include "xrpndn/sim/topology.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>

namespace xrpndn::sim {

struct LinkOverride
{
  std::string a;
  std::string b;
  Duration latency;
};

struct ValidatorParams
{
  Duration ledgerInterval = std::chrono::seconds(3);
  Duration intervalJitter = Duration::zero();
  /// defaults to the UNL size (every validator must agree)
  std::optional<std::size_t> quorum;
  std::uint32_t payloadSize = xrpl::DEFAULT_VALIDATION_SIZE;
};

std::size_t
effectiveQuorum(const ValidatorParams& params, std::size_t unlSize);

struct RunConfig
{
  TopologyKind topology = TopologyKind::Triangle6;
  /// used when topology is Custom
  std::optional<Topology> customTopology;
  model::ModelKind model = model::ModelKind::Piggyback;
  Duration duration = std::chrono::hours(1);
  std::uint64_t seed = 1;
  Duration linkLatency = std::chrono::milliseconds(5);
  std::vector<LinkOverride> linkOverrides;
  /// labels of extra listening nodes
  std::vector<std::string> observers;
  ValidatorParams validator;
  model::ModelParams params;
  std::size_t csCapacity = ndn::ContentStore::DEFAULT_CAPACITY;
  metrics::EncodingModel encoding;
  metrics::MetricsOptions metrics;

  /// Throws std::invalid_argument naming the offending field.
  void
  validate() const;

  /// The topology with latency overrides and observers applied.
  Topology
  makeTopology() const;
};

struct LinkCounters
{
  /// index 0: a -> b, index 1: b -> a
  std::array<std::uint64_t, 2> bytes{};
  std::array<std::uint64_t, 2> packets{};
};

struct RunResult
{
  Topology topology;
  Duration duration;
  EventLog log;
  std::vector<LinkCounters> links;
  std::map<std::string, xrpl::ValidatorCounters> counters;
  /// observer -> producer -> first-copy arrival times
  std::map<std::string, std::map<std::string, std::vector<TimePoint>>> arrivals;
  std::map<std::string, ndn::CsStats> csStats;
  std::uint64_t eventsProcessed = 0;
};

/**
 * \brief Runs one experiment to completion.
 *
 * Events with fire time before the horizon run normally; afterwards only
 * in-flight packets are delivered, so every transmission has a matching arrival.
 */
RunResult
simulate(const RunConfig& config);

/// Builds the FIB of every NDN node for the application nodes of \p topo.
void
installRoutes(const Topology& topo, std::vector<std::unique_ptr<ndn::Forwarder>>& forwarders);

} // namespace xrpndn::sim

#endif // XRPNDN_SIM_SIMULATOR_HPP
