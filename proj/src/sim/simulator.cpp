#include "xrpndn/sim/simulator.hpp"

#include <fmt/format.h>

#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace xrpndn::sim {

using model::ModelKind;

void
RunConfig::validate() const
{
  if (duration <= Duration::zero()) {
    throw std::invalid_argument("duration_s: must be positive");
  }
  if (linkLatency < Duration::zero()) {
    throw std::invalid_argument("link_latency_ms: must be non-negative");
  }
  if (csCapacity == 0) {
    throw std::invalid_argument("ndn.cs_capacity: must be positive");
  }
  params.validate();
  metrics.validate();

  Topology topo = makeTopology();
  if (!topo.isConnected()) {
    throw std::invalid_argument("topology: graph is not connected");
  }
  auto validators = topo.validators();
  if (validators.empty()) {
    throw std::invalid_argument("topology: no validator nodes");
  }
  std::set<std::string> unl;
  for (NodeId v : validators) {
    unl.insert(topo.node(v).label);
  }
  xrpl::ValidatorConfig{unl, effectiveQuorum(validator, unl.size()), validator.ledgerInterval,
                        validator.intervalJitter, validator.payloadSize}
    .validate();
  for (const auto& label : unl) {
    if (xrpl::encodedHeaderSize(label) > validator.payloadSize) {
      throw std::invalid_argument(fmt::format("validator.payload_size: must be at least {} for "
                                              "validator {}", xrpl::encodedHeaderSize(label), label));
    }
  }

  for (const auto& n : topo.nodes()) {
    if (model == ModelKind::Baseline) {
      if (!n.validator || n.ndn) {
        throw std::invalid_argument(
          fmt::format("model: baseline needs directly linked validators without NDN, "
                      "node {} does not qualify", n.label));
      }
    }
    else if (!n.ndn) {
      throw std::invalid_argument(fmt::format("model: {} needs NDN forwarding on every node, "
                                              "node {} has none", model::toString(model), n.label));
    }
  }
  if (metrics.observer) {
    auto id = topo.findNode(*metrics.observer);
    if (!id || !topo.node(*id).hasApp()) {
      throw std::invalid_argument(fmt::format("metrics.observer: '{}' is not an application node",
                                              *metrics.observer));
    }
  }
}

std::size_t
effectiveQuorum(const ValidatorParams& params, std::size_t unlSize)
{
  return params.quorum.value_or(unlSize);
}

Topology
RunConfig::makeTopology() const
{
  std::optional<Topology> topo;
  if (topology == TopologyKind::Custom) {
    if (!customTopology) {
      throw std::invalid_argument("custom_topology: required when topology is custom");
    }
    topo = *customTopology;
  }
  else {
    topo = buildTopology(topology, linkLatency);
  }

  for (const auto& o : linkOverrides) {
    auto a = topo->findNode(o.a);
    auto b = topo->findNode(o.b);
    if (!a || !b) {
      throw std::invalid_argument(fmt::format("links: unknown node in {}-{}", o.a, o.b));
    }
    try {
      topo->setLinkLatency(*a, *b, o.latency);
    }
    catch (const TopologyError& e) {
      throw std::invalid_argument(fmt::format("links: {}", e.what()));
    }
  }
  for (const auto& label : observers) {
    auto id = topo->findNode(label);
    if (!id) {
      throw std::invalid_argument(fmt::format("observers: unknown node '{}'", label));
    }
    try {
      topo->setObserver(*id, true);
    }
    catch (const TopologyError& e) {
      throw std::invalid_argument(fmt::format("observers: {}", e.what()));
    }
  }
  return *topo;
}

namespace {

/// Nodes reachable from \p start without passing through \p avoid.
std::vector<bool>
reachableAvoiding(const Topology& topo, NodeId start, NodeId avoid)
{
  std::vector<bool> seen(topo.nodes().size(), false);
  seen[avoid] = true;
  seen[start] = true;
  std::deque<NodeId> queue{start};
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    for (NodeId m : topo.neighbors(n)) {
      if (!seen[m]) {
        seen[m] = true;
        queue.push_back(m);
      }
    }
  }
  seen[avoid] = false;
  return seen;
}

std::vector<std::size_t>
hopDistances(const Topology& topo, NodeId from)
{
  constexpr auto UNREACHED = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(topo.nodes().size(), UNREACHED);
  dist[from] = 0;
  std::deque<NodeId> queue{from};
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    for (NodeId m : topo.neighbors(n)) {
      if (dist[m] == UNREACHED) {
        dist[m] = dist[n] + 1;
        queue.push_back(m);
      }
    }
  }
  return dist;
}

} // namespace

void
installRoutes(const Topology& topo, std::vector<std::unique_ptr<ndn::Forwarder>>& forwarders)
{
  const auto& nodes = topo.nodes();

  // unicast: shortest hop path toward each producer, lowest neighbor id on ties
  for (NodeId p : topo.validators()) {
    auto prefix = model::producerPrefix(nodes[p].label);
    auto dist = hopDistances(topo, p);
    for (NodeId n = 0; n < nodes.size(); ++n) {
      if (!forwarders[n]) {
        continue;
      }
      if (n == p) {
        forwarders[n]->addLocalProducer(prefix);
        continue;
      }
      for (NodeId m : topo.neighbors(n)) {
        if (dist[m] + 1 == dist[n]) {
          forwarders[n]->fib().insert(prefix, {faceToward(m)}, ndn::Strategy::Unicast);
          break;
        }
      }
    }
  }

  // multicast: every neighbor behind which some application node sits
  auto apps = topo.appNodes();
  for (NodeId n = 0; n < nodes.size(); ++n) {
    if (!forwarders[n]) {
      continue;
    }
    std::set<FaceId> faces;
    for (NodeId m : topo.neighbors(n)) {
      auto reach = reachableAvoiding(topo, m, n);
      for (NodeId a : apps) {
        if (reach[a]) {
          faces.insert(faceToward(m));
          break;
        }
      }
    }
    for (const auto& prefix : {model::makeName(model::NameKind::Piggyback), model::announcePrefix()}) {
      forwarders[n]->fib().insert(prefix, faces, ndn::Strategy::Multicast);
    }
  }
}

namespace {

using Packet = std::variant<ndn::Interest, ndn::Data, xrpl::Validation>;

struct LedgerCloseEvent
{
  NodeId node;
};

struct PacketArrival
{
  std::size_t link;
  NodeId from;
  NodeId to;
  Packet packet;
};

struct TimerFire
{
  NodeId node;
  model::TimerTag tag;
};

using EventPayload = std::variant<LedgerCloseEvent, PacketArrival, TimerFire>;

RecordKind
toRecordKind(model::JournalKind kind)
{
  switch (kind) {
    case model::JournalKind::LedgerClose:
      return RecordKind::LedgerClose;
    case model::JournalKind::ValidationOut:
      return RecordKind::ValidationOut;
    case model::JournalKind::ValidationInFirst:
      return RecordKind::ValidationInFirst;
    case model::JournalKind::ValidationInDuplicate:
      return RecordKind::ValidationInDuplicate;
    case model::JournalKind::ValidationInUntrusted:
      return RecordKind::ValidationInUntrusted;
  }
  throw std::logic_error("unknown journal kind");
}

std::string
recordName(const std::string& producer, LedgerSeq seq)
{
  return fmt::format("{}/{}", producer, seq);
}

class Engine
{
public:
  explicit
  Engine(const RunConfig& config)
    : m_config(config)
    , m_topo(config.makeTopology())
    , m_rng(config.seed)
    , m_links(m_topo.links().size())
  {
    const auto& nodes = m_topo.nodes();
    m_forwarders.resize(nodes.size());
    m_apps.resize(nodes.size());

    std::set<std::string> unl;
    for (NodeId v : m_topo.validators()) {
      unl.insert(nodes[v].label);
    }
    xrpl::ValidatorConfig vc{unl, effectiveQuorum(config.validator, unl.size()),
                             config.validator.ledgerInterval, config.validator.intervalJitter,
                             config.validator.payloadSize};

    for (NodeId n = 0; n < nodes.size(); ++n) {
      const auto& spec = nodes[n];
      if (spec.ndn) {
        m_forwarders[n] = std::make_unique<ndn::Forwarder>(spec.label, spec.hasApp(),
                                                           config.csCapacity);
      }
      if (spec.hasApp()) {
        model::XrplApp::Setup setup;
        setup.model = config.model;
        setup.nodeId = spec.label;
        setup.validator = vc;
        setup.params = config.params;
        setup.producing = spec.validator;
        setup.producers = unl;
        if (config.model == ModelKind::Baseline) {
          for (NodeId m : m_topo.neighbors(n)) {
            setup.peers.insert(nodes[m].label);
          }
        }
        m_apps[n] = std::make_unique<model::XrplApp>(std::move(setup));
      }
    }
    installRoutes(m_topo, m_forwarders);
  }

  RunResult
  run()
  {
    const auto& nodes = m_topo.nodes();
    for (NodeId n = 0; n < nodes.size(); ++n) {
      if (m_apps[n]) {
        auto actions = m_apps[n]->start(now(), m_rng);
        flushJournal(n);
        execute(n, actions);
      }
    }
    for (NodeId n = 0; n < nodes.size(); ++n) {
      if (m_apps[n]) {
        if (auto first = m_apps[n]->firstCloseTime(m_rng); first && *first < m_config.duration) {
          m_scheduler.schedule(*first, LedgerCloseEvent{n});
        }
      }
    }

    std::uint64_t processed = 0;
    while (!m_scheduler.empty()) {
      if (m_scheduler.peek().fireAt >= m_config.duration) {
        m_draining = true;
      }
      auto event = m_scheduler.pop();
      if (m_draining && !std::holds_alternative<PacketArrival>(event.payload)) {
        continue;
      }
      ++processed;
      std::visit([this] (auto& e) { handle(e); }, event.payload);
    }

    TimePoint end = std::max(now(), TimePoint(m_config.duration));
    RunResult result{m_topo, m_config.duration, {}, m_links, {}, {}, {}, processed};
    for (NodeId n = 0; n < nodes.size(); ++n) {
      if (m_forwarders[n]) {
        const auto& cs = m_forwarders[n]->cs();
        m_log.append({end, RecordKind::CsHits, std::nullopt, nodes[n].label, "", "", cs.stats().hits});
        m_log.append({end, RecordKind::CsMisses, std::nullopt, nodes[n].label, "", "", cs.stats().misses});
        m_log.append({end, RecordKind::CsEntries, std::nullopt, nodes[n].label, "", "", cs.size()});
        result.csStats[nodes[n].label] = cs.stats();
      }
      if (m_apps[n]) {
        result.counters[nodes[n].label] = m_apps[n]->validator().counters();
        result.arrivals[nodes[n].label] = m_apps[n]->arrivals();
      }
    }
    result.log = std::move(m_log);
    return result;
  }

private:
  TimePoint
  now() const
  {
    return m_scheduler.now();
  }

  void
  handle(const LedgerCloseEvent& e)
  {
    auto outcome = m_apps[e.node]->onLedgerClose(now(), m_rng);
    flushJournal(e.node);
    execute(e.node, outcome.actions);
    if (outcome.nextCloseTime < m_config.duration) {
      m_scheduler.schedule(outcome.nextCloseTime, LedgerCloseEvent{e.node});
    }
  }

  void
  handle(const TimerFire& e)
  {
    auto actions = m_apps[e.node]->onTimer(e.tag, now(), m_rng);
    flushJournal(e.node);
    execute(e.node, actions);
  }

  void
  handle(const PacketArrival& e)
  {
    std::visit([&] (const auto& pkt) {
      using T = std::decay_t<decltype(pkt)>;
      if constexpr (std::is_same_v<T, xrpl::Validation>) {
        auto actions = m_apps.at(e.to)->onPeerValidation(pkt, m_topo.node(e.from).label, now());
        flushJournal(e.to);
        execute(e.to, actions);
      }
      else if constexpr (std::is_same_v<T, ndn::Interest>) {
        processEffects(e.to, forwarder(e.to).onInterest(pkt, faceToward(e.from), now()));
      }
      else {
        processEffects(e.to, forwarder(e.to).onData(pkt, faceToward(e.from), now()));
      }
    }, e.packet);
  }

  ndn::Forwarder&
  forwarder(NodeId n)
  {
    if (!m_forwarders[n]) {
      throw std::logic_error("node " + m_topo.node(n).label + " has no NDN forwarder");
    }
    return *m_forwarders[n];
  }

  void
  processEffects(NodeId n, const ndn::Effects& effects)
  {
    for (const auto& effect : effects) {
      if (auto* si = std::get_if<ndn::SendInterest>(&effect)) {
        transmit(n, neighborOf(si->face), si->interest);
      }
      else if (auto* sd = std::get_if<ndn::SendData>(&effect)) {
        transmit(n, neighborOf(sd->face), sd->data);
      }
      else if (auto* d = std::get_if<ndn::DeliverToApp>(&effect)) {
        if (!m_apps[n]) {
          continue;
        }
        auto actions = std::visit([&] (const auto& pkt) {
          using T = std::decay_t<decltype(pkt)>;
          if constexpr (std::is_same_v<T, ndn::Interest>) {
            return m_apps[n]->onInterest(pkt, now(), m_rng);
          }
          else {
            return m_apps[n]->onData(pkt, now(), m_rng);
          }
        }, d->packet);
        flushJournal(n);
        execute(n, actions);
      }
    }
  }

  void
  execute(NodeId n, const model::AppActions& actions)
  {
    for (const auto& action : actions) {
      if (auto* ei = std::get_if<model::ExpressInterest>(&action)) {
        processEffects(n, forwarder(n).onInterest(ei->interest, LOCAL_FACE, now()));
      }
      else if (auto* pd = std::get_if<model::PutData>(&action)) {
        processEffects(n, forwarder(n).onData(pd->data, LOCAL_FACE, now()));
      }
      else if (auto* sp = std::get_if<model::SendToPeer>(&action)) {
        auto peer = m_topo.findNode(sp->peer);
        if (!peer) {
          throw std::logic_error("unknown peer " + sp->peer);
        }
        transmit(n, *peer, sp->validation);
      }
      else if (auto* st = std::get_if<model::StartTimer>(&action)) {
        if (!m_draining) {
          m_scheduler.schedule(now() + st->delay, TimerFire{n, st->tag});
        }
      }
    }
  }

  void
  transmit(NodeId from, NodeId to, Packet packet)
  {
    auto idx = m_topo.findLink(from, to);
    if (!idx) {
      throw std::logic_error("no link " + m_topo.node(from).label + "-" + m_topo.node(to).label);
    }
    const auto& link = m_topo.links()[*idx];
    std::size_t dir = link.a == from ? 0 : 1;

    const auto& enc = m_config.encoding;
    EventRecord r{now(), RecordKind::Interest, *idx, m_topo.node(from).label, m_topo.node(to).label, {}, 0};
    if (auto* i = std::get_if<ndn::Interest>(&packet)) {
      r.name = i->getName().toUri();
      r.size = enc.interestSize(*i);
    }
    else if (auto* d = std::get_if<ndn::Data>(&packet)) {
      r.kind = RecordKind::Data;
      r.name = d->getName().toUri();
      r.size = enc.dataSize(*d);
    }
    else {
      const auto& v = std::get<xrpl::Validation>(packet);
      r.kind = RecordKind::Validation;
      r.name = recordName(v.validatorId, v.ledgerSeq);
      r.size = enc.peerMessageSize(v);
    }

    m_links[*idx].bytes[dir] += r.size;
    m_links[*idx].packets[dir] += 1;
    m_log.append(std::move(r));
    m_scheduler.schedule(now() + link.latency, PacketArrival{*idx, from, to, std::move(packet)});
  }

  void
  flushJournal(NodeId n)
  {
    for (auto& j : m_apps[n]->takeJournal()) {
      m_log.append({j.at, toRecordKind(j.kind), std::nullopt, m_topo.node(n).label, "",
                    recordName(j.producer, j.seq), j.count});
    }
  }

private:
  const RunConfig& m_config;
  Topology m_topo;
  Rng m_rng;
  Scheduler<EventPayload> m_scheduler;
  std::vector<std::unique_ptr<ndn::Forwarder>> m_forwarders;
  std::vector<std::unique_ptr<model::XrplApp>> m_apps;
  std::vector<LinkCounters> m_links;
  EventLog m_log;
  bool m_draining = false;
};

} // namespace

RunResult
simulate(const RunConfig& config)
{
  config.validate();
  return Engine(config).run();
}

} // namespace xrpndn::sim
