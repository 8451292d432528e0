#include "xrpndn/sim/topology.hpp"

#include <algorithm>
#include <set>

namespace xrpndn::sim {

std::string_view
toString(TopologyKind kind)
{
  switch (kind) {
    case TopologyKind::Baseline3:
      return "baseline3";
    case TopologyKind::Star7:
      return "star7";
    case TopologyKind::Triangle6:
      return "triangle6";
    case TopologyKind::Custom:
      return "custom";
  }
  return "unknown";
}

TopologyKind
parseTopologyKind(std::string_view text)
{
  for (auto kind : {TopologyKind::Baseline3, TopologyKind::Star7, TopologyKind::Triangle6,
                    TopologyKind::Custom}) {
    if (toString(kind) == text) {
      return kind;
    }
  }
  throw TopologyError("unknown topology '" + std::string(text) + "'");
}

Topology::Topology(TopologyKind kind, std::vector<NodeSpec> nodes, std::vector<LinkSpec> links)
  : m_kind(kind)
  , m_nodes(std::move(nodes))
  , m_links(std::move(links))
{
  validate();
}

void
Topology::validate() const
{
  if (m_nodes.empty()) {
    throw TopologyError("topology has no nodes");
  }
  std::set<std::string> labels;
  for (const auto& n : m_nodes) {
    if (n.label.empty() || !labels.insert(n.label).second) {
      throw TopologyError("node labels must be unique and non-empty ('" + n.label + "')");
    }
    if (n.validator && n.observer) {
      throw TopologyError("node " + n.label + " cannot be both validator and observer");
    }
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& l : m_links) {
    if (l.a >= m_nodes.size() || l.b >= m_nodes.size() || l.a == l.b) {
      throw TopologyError("link endpoints must be two distinct existing nodes");
    }
    if (!seen.insert(std::minmax(l.a, l.b)).second) {
      throw TopologyError("duplicate link " + m_nodes[l.a].label + "-" + m_nodes[l.b].label);
    }
    if (l.latency < Duration::zero()) {
      throw TopologyError("link latency must be non-negative");
    }
  }
}

std::optional<NodeId>
Topology::findNode(std::string_view label) const
{
  for (NodeId i = 0; i < m_nodes.size(); ++i) {
    if (m_nodes[i].label == label) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t>
Topology::findLink(NodeId a, NodeId b) const
{
  for (std::size_t i = 0; i < m_links.size(); ++i) {
    const auto& l = m_links[i];
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<NodeId>
Topology::neighbors(NodeId id) const
{
  std::vector<NodeId> out;
  for (const auto& l : m_links) {
    if (l.a == id) {
      out.push_back(l.b);
    }
    else if (l.b == id) {
      out.push_back(l.a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId>
Topology::validators() const
{
  std::vector<NodeId> out;
  for (NodeId i = 0; i < m_nodes.size(); ++i) {
    if (m_nodes[i].validator) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<NodeId>
Topology::appNodes() const
{
  std::vector<NodeId> out;
  for (NodeId i = 0; i < m_nodes.size(); ++i) {
    if (m_nodes[i].hasApp()) {
      out.push_back(i);
    }
  }
  return out;
}

void
Topology::setLinkLatency(NodeId a, NodeId b, Duration latency)
{
  auto idx = findLink(a, b);
  if (!idx) {
    throw TopologyError("no link between " + m_nodes.at(a).label + " and " + m_nodes.at(b).label);
  }
  if (latency < Duration::zero()) {
    throw TopologyError("link latency must be non-negative");
  }
  m_links[*idx].latency = latency;
}

void
Topology::setObserver(NodeId id, bool observer)
{
  auto& n = m_nodes.at(id);
  if (observer && n.validator) {
    throw TopologyError("node " + n.label + " is a validator and cannot be an observer");
  }
  n.observer = observer;
}

bool
Topology::isConnected() const
{
  std::vector<bool> seen(m_nodes.size(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    for (NodeId m : neighbors(n)) {
      if (!seen[m]) {
        seen[m] = true;
        stack.push_back(m);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [] (bool b) { return b; });
}

Topology
buildTopology(TopologyKind kind, Duration linkLatency)
{
  switch (kind) {
    case TopologyKind::Baseline3:
      return Topology(kind,
                      {{"A", false, true, false}, {"B", false, true, false}, {"C", false, true, false}},
                      {{0, 1, linkLatency}, {0, 2, linkLatency}, {1, 2, linkLatency}});

    case TopologyKind::Star7: {
      std::vector<NodeSpec> nodes{{"H", true, false, false}};
      std::vector<LinkSpec> links;
      for (NodeId leaf = 1; leaf <= 6; ++leaf) {
        nodes.push_back({"L" + std::to_string(leaf), true, leaf <= 3, false});
        links.push_back({0, leaf, linkLatency});
      }
      return Topology(kind, std::move(nodes), std::move(links));
    }

    case TopologyKind::Triangle6:
      return Topology(kind,
                      {{"A", true, true, false}, {"B", true, true, false}, {"C", true, true, false},
                       {"AB", true, false, false}, {"BC", true, false, false}, {"CA", true, false, false}},
                      {{0, 3, linkLatency}, {3, 1, linkLatency}, {1, 4, linkLatency},
                       {4, 2, linkLatency}, {2, 5, linkLatency}, {5, 0, linkLatency}});

    case TopologyKind::Custom:
      break;
  }
  throw TopologyError("topology '" + std::string(toString(kind)) + "' is not a preset");
}

} // namespace xrpndn::sim
