#ifndef XRPNDN_CLI_CONFIG_HPP
#define XRPNDN_CLI_CONFIG_HPP

#include "xrpndn/sim/simulator.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>

namespace xrpndn::cli {

/// Invalid configuration; the message starts with the offending field path.
class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig
{
  sim::RunConfig run;
  std::optional<std::filesystem::path> outputDir;
};

/**
 * \brief Builds an experiment from its JSON description.
 *
 * Every key is optional and falls back to the RunConfig default; unknown keys
 * and ill-typed values are rejected. The result is fully validated.
 */
ExperimentConfig
parseConfig(const nlohmann::json& j);

/// Reads and parses a JSON config file. Throws ConfigError.
ExperimentConfig
loadConfig(const std::filesystem::path& path);

} // namespace xrpndn::cli

#endif // XRPNDN_CLI_CONFIG_HPP
