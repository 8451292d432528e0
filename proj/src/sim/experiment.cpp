#include "xrpndn/sim/experiment.hpp"

namespace xrpndn::sim {

metrics::SummaryInputs
summaryInputs(const RunConfig& config, const Topology& topo)
{
  auto validators = topo.validators();
  if (validators.empty()) {
    throw std::invalid_argument("topology: no validator nodes");
  }
  const auto& first = topo.node(validators.front()).label;
  return {std::string(model::toString(config.model)),
          std::string(toString(topo.kind())),
          config.duration,
          config.metrics.observer.value_or(first),
          first,
          config.metrics};
}

RunOutput
run(const RunConfig& config)
{
  auto result = simulate(config);
  auto report = metrics::summarize(result.log, summaryInputs(config, result.topology));
  return {std::move(result), std::move(report)};
}

} // namespace xrpndn::sim
