#include "xrpndn/ndn/forwarder.hpp"

#include <algorithm>
#include <stdexcept>

namespace xrpndn::ndn {

std::string_view
toString(DropReason r)
{
  switch (r) {
    case DropReason::NoRoute:
      return "no-route";
    case DropReason::DuplicateNonce:
      return "duplicate-nonce";
    case DropReason::Unsolicited:
      return "unsolicited";
  }
  return "unknown";
}

Forwarder::Forwarder(std::string nodeId, bool hasApp, std::size_t csCapacity)
  : m_nodeId(std::move(nodeId))
  , m_hasApp(hasApp)
  , m_cs(csCapacity)
{
}

void
Forwarder::addLocalProducer(const Name& prefix)
{
  const FibEntry* route = m_fib.findLongestPrefixMatch(prefix);
  if (route != nullptr && route->prefix == prefix && route->faces.count(LOCAL_FACE) > 0) {
    throw std::invalid_argument("local producer prefix " + prefix.toUri() +
                                " overlaps a FIB route to the local face");
  }
  m_localProducers.push_back(prefix);
}

bool
Forwarder::isLocallyProduced(const Name& name) const
{
  return std::any_of(m_localProducers.begin(), m_localProducers.end(),
                     [&] (const Name& prefix) { return prefix.isPrefixOf(name); });
}

Effects
Forwarder::onInterest(const Interest& interest, FaceId from, TimePoint now)
{
  const Name& name = interest.getName();

  if (interest.hasAppParameters()) {
    const FibEntry* route = m_fib.findLongestPrefixMatch(name);
    if (route != nullptr && route->strategy == Strategy::Multicast) {
      return forwardPiggyback(interest, *route, from, now);
    }
  }

  if (auto cached = m_cs.lookup(name, now)) {
    if (from == LOCAL_FACE) {
      return {DeliverToApp{std::move(*cached)}};
    }
    return {SendData{from, std::move(*cached)}};
  }

  switch (m_pit.insert(interest, from, now)) {
    case PitInsertResult::New:
      break;
    case PitInsertResult::Aggregated:
      return {};
    case PitInsertResult::DuplicateNonce:
      return {Drop{DropReason::DuplicateNonce}};
  }

  if (from != LOCAL_FACE && m_hasApp && isLocallyProduced(name)) {
    return {DeliverToApp{interest}};
  }

  const FibEntry* route = m_fib.findLongestPrefixMatch(name);
  if (route == nullptr) {
    m_pit.erase(name);
    return {Drop{DropReason::NoRoute}};
  }

  Effects effects;
  if (route->strategy == Strategy::Multicast && m_hasApp && from != LOCAL_FACE) {
    effects.emplace_back(DeliverToApp{interest});
  }
  for (FaceId face : ForwardingInformationBase::selectNextHops(*route, from)) {
    if (face == LOCAL_FACE) {
      effects.emplace_back(DeliverToApp{interest});
    }
    else {
      effects.emplace_back(SendInterest{face, interest});
    }
  }
  if (effects.empty()) {
    m_pit.erase(name);
    effects.emplace_back(Drop{DropReason::NoRoute});
  }
  return effects;
}

Effects
Forwarder::forwardPiggyback(const Interest& interest, const FibEntry& route, FaceId from,
                            TimePoint now)
{
  if (m_deadNonces.checkAndRecord(interest.getName(), interest.getNonce(), now,
                                  interest.getLifetime())) {
    return {Drop{DropReason::DuplicateNonce}};
  }

  Effects effects;
  if (m_hasApp && from != LOCAL_FACE) {
    effects.emplace_back(DeliverToApp{interest});
  }
  for (FaceId face : ForwardingInformationBase::selectNextHops(route, from)) {
    if (face != LOCAL_FACE) {
      effects.emplace_back(SendInterest{face, interest});
    }
  }
  return effects;
}

Effects
Forwarder::onData(const Data& data, FaceId from, TimePoint now)
{
  std::set<FaceId> faces = m_pit.consume(data.getName(), now);
  faces.erase(from);
  if (faces.empty()) {
    return {Drop{DropReason::Unsolicited}};
  }

  m_cs.insert(data, now);
  Effects effects;
  effects.emplace_back(StoreInCs{data.getName()});
  for (FaceId face : faces) {
    if (face == LOCAL_FACE) {
      effects.emplace_back(DeliverToApp{data});
    }
    else {
      effects.emplace_back(SendData{face, data});
    }
  }
  return effects;
}

} // namespace xrpndn::ndn
