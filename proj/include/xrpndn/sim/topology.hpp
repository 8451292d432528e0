#ifndef XRPNDN_SIM_TOPOLOGY_HPP
#define XRPNDN_SIM_TOPOLOGY_HPP

#include "xrpndn/common.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xrpndn::sim {

enum class TopologyKind {
  Baseline3, ///< 3 XRPL validators, fully connected, no NDN
  Star7,     ///< hub + 6 leaves; validators on leaves L1..L3
  Triangle6, ///< corners A, B, C host validators; routers AB, BC, CA sit mid-edge
  Custom,
};

std::string_view
toString(TopologyKind kind);

TopologyKind
parseTopologyKind(std::string_view text);

struct NodeSpec
{
  std::string label;
  bool ndn = true;       ///< runs an NDN forwarder
  bool validator = false;
  bool observer = false; ///< listens to validations without producing any

  bool
  hasApp() const noexcept
  {
    return validator || observer;
  }
};

/// Bidirectional link; each direction is accounted separately.
struct LinkSpec
{
  NodeId a;
  NodeId b;
  Duration latency;
};

class TopologyError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class Topology
{
public:
  Topology(TopologyKind kind, std::vector<NodeSpec> nodes, std::vector<LinkSpec> links);

  TopologyKind
  kind() const noexcept
  {
    return m_kind;
  }

  const std::vector<NodeSpec>&
  nodes() const noexcept
  {
    return m_nodes;
  }

  const std::vector<LinkSpec>&
  links() const noexcept
  {
    return m_links;
  }

  const NodeSpec&
  node(NodeId id) const
  {
    return m_nodes.at(id);
  }

  std::optional<NodeId>
  findNode(std::string_view label) const;

  /// Index of the link joining \p a and \p b.
  std::optional<std::size_t>
  findLink(NodeId a, NodeId b) const;

  /// Neighbors in increasing id order.
  std::vector<NodeId>
  neighbors(NodeId id) const;

  std::vector<NodeId>
  validators() const;

  /// Nodes hosting an application (validators and observers).
  std::vector<NodeId>
  appNodes() const;

  void
  setLinkLatency(NodeId a, NodeId b, Duration latency);

  void
  setObserver(NodeId id, bool observer);

  bool
  isConnected() const;

private:
  void
  validate() const;

private:
  TopologyKind m_kind;
  std::vector<NodeSpec> m_nodes;
  std::vector<LinkSpec> m_links;
};

/// Builds one of the preset topologies. Throws TopologyError for Custom.
Topology
buildTopology(TopologyKind kind, Duration linkLatency = std::chrono::milliseconds(5));

/// Face of node \p self that leads to neighbor \p neighbor. Face 0 is the local application.
constexpr FaceId
faceToward(NodeId neighbor)
{
  return neighbor + 1;
}

constexpr NodeId
neighborOf(FaceId face)
{
  return face - 1;
}

} // namespace xrpndn::sim

#endif // XRPNDN_SIM_TOPOLOGY_HPP
