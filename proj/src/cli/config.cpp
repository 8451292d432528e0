#include "xrpndn/cli/config.hpp"

#include <fmt/format.h>

#include <fstream>
#include <set>

namespace xrpndn::cli {

namespace {

using nlohmann::json;

/// Typed, consumption-tracking view of one JSON object.
class Section
{
public:
  Section(const json& j, std::string path)
    : m_json(j)
    , m_path(std::move(path))
  {
    if (!j.is_object()) {
      throw ConfigError(fmt::format("{}: must be an object", m_path.empty() ? "config" : m_path));
    }
  }

  std::string
  field(std::string_view key) const
  {
    return m_path.empty() ? std::string(key) : fmt::format("{}.{}", m_path, key);
  }

  const json*
  find(std::string_view key)
  {
    m_used.emplace(key);
    auto it = m_json.find(key);
    return it == m_json.end() ? nullptr : &*it;
  }

  std::optional<double>
  number(std::string_view key)
  {
    auto* v = find(key);
    if (!v) {
      return std::nullopt;
    }
    if (!v->is_number()) {
      throw ConfigError(fmt::format("{}: must be a number", field(key)));
    }
    return v->get<double>();
  }

  std::optional<double>
  positive(std::string_view key)
  {
    auto v = number(key);
    if (v && !(*v > 0)) {
      throw ConfigError(fmt::format("{}: must be positive", field(key)));
    }
    return v;
  }

  std::optional<double>
  nonNegative(std::string_view key)
  {
    auto v = number(key);
    if (v && !(*v >= 0)) {
      throw ConfigError(fmt::format("{}: must be non-negative", field(key)));
    }
    return v;
  }

  std::optional<std::uint64_t>
  unsignedInt(std::string_view key)
  {
    auto* v = find(key);
    if (!v) {
      return std::nullopt;
    }
    if (!v->is_number_unsigned()) {
      throw ConfigError(fmt::format("{}: must be a non-negative integer", field(key)));
    }
    return v->get<std::uint64_t>();
  }

  std::optional<std::string>
  string(std::string_view key)
  {
    auto* v = find(key);
    if (!v) {
      return std::nullopt;
    }
    if (!v->is_string()) {
      throw ConfigError(fmt::format("{}: must be a string", field(key)));
    }
    return v->get<std::string>();
  }

  std::optional<bool>
  boolean(std::string_view key)
  {
    auto* v = find(key);
    if (!v) {
      return std::nullopt;
    }
    if (!v->is_boolean()) {
      throw ConfigError(fmt::format("{}: must be true or false", field(key)));
    }
    return v->get<bool>();
  }

  const json*
  array(std::string_view key)
  {
    auto* v = find(key);
    if (v && !v->is_array()) {
      throw ConfigError(fmt::format("{}: must be an array", field(key)));
    }
    return v;
  }

  std::optional<Section>
  object(std::string_view key)
  {
    auto* v = find(key);
    if (!v) {
      return std::nullopt;
    }
    return Section(*v, field(key));
  }

  /// Rejects keys nobody asked for.
  void
  finish() const
  {
    for (const auto& [key, value] : m_json.items()) {
      if (m_used.count(key) == 0) {
        throw ConfigError(fmt::format("{}: unknown field", field(key)));
      }
    }
  }

private:
  const json& m_json;
  std::string m_path;
  std::set<std::string, std::less<>> m_used;
};

template<typename F>
auto
translate(const std::string& field, F&& parse)
{
  try {
    return parse();
  }
  catch (const ConfigError&) {
    throw;
  }
  catch (const std::exception& e) {
    throw ConfigError(fmt::format("{}: {}", field, e.what()));
  }
}

sim::Topology
parseCustomTopology(Section s)
{
  std::vector<sim::NodeSpec> nodes;
  std::vector<sim::LinkSpec> links;

  auto* nodeArray = s.array("nodes");
  if (!nodeArray) {
    throw ConfigError(s.field("nodes") + ": required");
  }
  for (std::size_t i = 0; i < nodeArray->size(); ++i) {
    Section n((*nodeArray)[i], fmt::format("{}[{}]", s.field("nodes"), i));
    auto label = n.string("label");
    if (!label) {
      throw ConfigError(n.field("label") + ": required");
    }
    nodes.push_back({*label, n.boolean("ndn").value_or(true), n.boolean("validator").value_or(false),
                     n.boolean("observer").value_or(false)});
    n.finish();
  }

  auto findNode = [&] (const std::string& label, const std::string& field) {
    for (NodeId id = 0; id < nodes.size(); ++id) {
      if (nodes[id].label == label) {
        return id;
      }
    }
    throw ConfigError(fmt::format("{}: unknown node '{}'", field, label));
  };

  if (auto* linkArray = s.array("links")) {
    for (std::size_t i = 0; i < linkArray->size(); ++i) {
      Section l((*linkArray)[i], fmt::format("{}[{}]", s.field("links"), i));
      auto a = l.string("a");
      auto b = l.string("b");
      if (!a || !b) {
        throw ConfigError(l.field(a ? "b" : "a") + ": required");
      }
      auto latency = l.nonNegative("latency_ms");
      links.push_back({findNode(*a, l.field("a")), findNode(*b, l.field("b")),
                       latency ? fromMillis(*latency) : std::chrono::milliseconds(5)});
      l.finish();
    }
  }
  s.finish();
  return translate(s.field("nodes"), [&] {
    return sim::Topology(sim::TopologyKind::Custom, std::move(nodes), std::move(links));
  });
}

} // namespace

ExperimentConfig
parseConfig(const nlohmann::json& j)
{
  ExperimentConfig cfg;
  auto& run = cfg.run;
  Section root(j, "");

  if (auto v = root.string("topology")) {
    run.topology = translate("topology", [&] { return sim::parseTopologyKind(*v); });
  }
  if (auto s = root.object("custom_topology")) {
    run.customTopology = parseCustomTopology(*s);
  }
  if (auto v = root.string("model")) {
    run.model = translate("model", [&] { return model::parseModelKind(*v); });
  }
  if (auto v = root.positive("duration_s")) {
    run.duration = fromSeconds(*v);
  }
  if (auto v = root.unsignedInt("seed")) {
    run.seed = *v;
  }
  if (auto v = root.nonNegative("link_latency_ms")) {
    run.linkLatency = fromMillis(*v);
  }
  if (auto* links = root.array("links")) {
    for (std::size_t i = 0; i < links->size(); ++i) {
      Section l((*links)[i], fmt::format("links[{}]", i));
      auto a = l.string("a");
      auto b = l.string("b");
      auto latency = l.nonNegative("latency_ms");
      if (!a || !b || !latency) {
        throw ConfigError(l.field(!a ? "a" : !b ? "b" : "latency_ms") + ": required");
      }
      run.linkOverrides.push_back({*a, *b, fromMillis(*latency)});
      l.finish();
    }
  }
  if (auto* observers = root.array("observers")) {
    for (std::size_t i = 0; i < observers->size(); ++i) {
      if (!(*observers)[i].is_string()) {
        throw ConfigError(fmt::format("observers[{}]: must be a string", i));
      }
      run.observers.push_back((*observers)[i].get<std::string>());
    }
  }

  if (auto s = root.object("validator")) {
    if (auto v = s->positive("ledger_interval_s")) {
      run.validator.ledgerInterval = fromSeconds(*v);
    }
    if (auto v = s->nonNegative("interval_jitter_s")) {
      run.validator.intervalJitter = fromSeconds(*v);
    }
    if (auto v = s->unsignedInt("quorum")) {
      run.validator.quorum = *v;
    }
    if (auto v = s->unsignedInt("payload_size")) {
      if (*v == 0 || *v > std::numeric_limits<std::uint32_t>::max()) {
        throw ConfigError("validator.payload_size: out of range");
      }
      run.validator.payloadSize = static_cast<std::uint32_t>(*v);
    }
    s->finish();
  }

  if (auto s = root.object("model_params")) {
    if (auto v = s->positive("poll_interval_ms")) {
      run.params.pollInterval = fromMillis(*v);
    }
    if (auto v = s->string("poll_schedule")) {
      run.params.pollSchedule = translate(s->field("poll_schedule"),
                                          [&] { return model::parsePollSchedule(*v); });
    }
    s->finish();
  }

  if (auto s = root.object("ndn")) {
    if (auto v = s->positive("interest_lifetime_ms")) {
      run.params.interestLifetime = fromMillis(*v);
    }
    if (auto v = s->nonNegative("validation_freshness_ms")) {
      run.params.validationFreshness = fromMillis(*v);
    }
    if (auto v = s->unsignedInt("cs_capacity")) {
      run.csCapacity = *v;
    }
    s->finish();
  }

  if (auto s = root.object("metrics")) {
    run.metrics.observer = s->string("observer");
    if (auto v = s->unsignedInt("rolling_window")) {
      run.metrics.rollingWindow = *v;
    }
    if (auto v = s->positive("bitrate_window_s")) {
      run.metrics.bitrateWindow = fromSeconds(*v);
    }
    if (auto v = s->positive("packet_window_s")) {
      run.metrics.packetWindow = fromSeconds(*v);
    }
    if (auto v = s->positive("histogram_bin_s")) {
      run.metrics.histogramBinWidth = *v;
    }
    if (auto e = s->object("encoding")) {
      auto& enc = run.encoding;
      enc.interestOverhead = e->unsignedInt("interest_overhead").value_or(enc.interestOverhead);
      enc.dataOverhead = e->unsignedInt("data_overhead").value_or(enc.dataOverhead);
      enc.componentOverhead = e->unsignedInt("component_overhead").value_or(enc.componentOverhead);
      enc.peerMessageOverhead = e->unsignedInt("peer_message_overhead").value_or(enc.peerMessageOverhead);
      e->finish();
    }
    s->finish();
  }

  if (auto v = root.string("output_dir")) {
    cfg.outputDir = *v;
  }
  root.finish();

  if (run.topology == sim::TopologyKind::Custom && !run.customTopology) {
    throw ConfigError("custom_topology: required when topology is custom");
  }
  if (run.topology != sim::TopologyKind::Custom && run.customTopology) {
    throw ConfigError("custom_topology: only allowed when topology is custom");
  }
  try {
    run.validate();
  }
  catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ExperimentConfig
loadConfig(const std::filesystem::path& path)
{
  std::ifstream is(path);
  if (!is) {
    throw ConfigError(fmt::format("config: cannot read {}", path.string()));
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  }
  catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(fmt::format("config: {} is not valid JSON ({})", path.string(), e.what()));
  }
  return parseConfig(j);
}

} // namespace xrpndn::cli
