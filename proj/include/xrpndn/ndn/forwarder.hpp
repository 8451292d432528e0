#ifndef XRPNDN_NDN_FORWARDER_HPP
#define XRPNDN_NDN_FORWARDER_HPP

#include "xrpndn/ndn/content-store.hpp"
#include "xrpndn/ndn/fib.hpp"
#include "xrpndn/ndn/pit.hpp"

#include <string>
#include <variant>
#include <vector>

namespace xrpndn::ndn {

struct SendInterest
{
  FaceId face;
  Interest interest;
};

struct SendData
{
  FaceId face;
  Data data;
};

/// Hand a packet to the co-located application (reserved face 0).
struct DeliverToApp
{
  std::variant<Interest, Data> packet;
};

struct StoreInCs
{
  Name name;
};

enum class DropReason {
  NoRoute,
  DuplicateNonce,
  Unsolicited,
};

std::string_view
toString(DropReason r);

struct Drop
{
  DropReason reason;
};

using Effect = std::variant<SendInterest, SendData, DeliverToApp, StoreInCs, Drop>;
using Effects = std::vector<Effect>;

/**
 * \brief State and forwarding pipeline of one NDN node.
 *
 * Pure transitions on explicit state with an explicit `now`. The caller turns
 * the returned effects into link transmissions and application calls.
 */
class Forwarder
{
public:
  explicit
  Forwarder(std::string nodeId, bool hasApp = true,
            std::size_t csCapacity = ContentStore::DEFAULT_CAPACITY);

  /**
   * Incoming Interest pipeline:
   *  1. piggybacked payload on a multicast prefix: deliver locally and flood on
   *     the multicast faces (bypasses CS and PIT; loops cut by nonce);
   *  2. Content Store hit: answer on the ingress face;
   *  3. PIT: aggregated or looping Interests stop here;
   *  4. local producer prefix: deliver to the application;
   *     otherwise FIB longest-prefix match and forward per strategy.
   */
  Effects
  onInterest(const Interest& interest, FaceId from, TimePoint now);

  /// Satisfies pending Interests, caching the packet; unsolicited Data is dropped.
  Effects
  onData(const Data& data, FaceId from, TimePoint now);

  void
  addLocalProducer(const Name& prefix);

  const std::string&
  nodeId() const noexcept
  {
    return m_nodeId;
  }

  bool
  hasApp() const noexcept
  {
    return m_hasApp;
  }

  ContentStore&
  cs() noexcept
  {
    return m_cs;
  }

  const ContentStore&
  cs() const noexcept
  {
    return m_cs;
  }

  PendingInterestTable&
  pit() noexcept
  {
    return m_pit;
  }

  ForwardingInformationBase&
  fib() noexcept
  {
    return m_fib;
  }

  const ForwardingInformationBase&
  fib() const noexcept
  {
    return m_fib;
  }

  const std::vector<Name>&
  localProducers() const noexcept
  {
    return m_localProducers;
  }

private:
  bool
  isLocallyProduced(const Name& name) const;

  Effects
  forwardPiggyback(const Interest& interest, const FibEntry& route, FaceId from, TimePoint now);

private:
  std::string m_nodeId;
  bool m_hasApp;
  ContentStore m_cs;
  PendingInterestTable m_pit;
  ForwardingInformationBase m_fib;
  DeadNonceList m_deadNonces;
  std::vector<Name> m_localProducers;
};

} // namespace xrpndn::ndn

#endif // XRPNDN_NDN_FORWARDER_HPP
