#ifndef XRPNDN_SIM_EXPERIMENT_HPP
#define XRPNDN_SIM_EXPERIMENT_HPP

#include "xrpndn/metrics/report.hpp"
#include "xrpndn/sim/simulator.hpp"

namespace xrpndn::sim {

struct RunOutput
{
  RunResult result;
  metrics::MetricsReport report;
};

/// Summary parameters of \p config; observer and NIC node default to the first validator.
metrics::SummaryInputs
summaryInputs(const RunConfig& config, const Topology& topo);

/// Simulates \p config and summarizes its event log.
RunOutput
run(const RunConfig& config);

} // namespace xrpndn::sim

#endif // XRPNDN_SIM_EXPERIMENT_HPP
