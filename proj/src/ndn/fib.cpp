#include "xrpndn/ndn/fib.hpp"

namespace xrpndn::ndn {

std::string_view
toString(Strategy s)
{
  return s == Strategy::Multicast ? "multicast" : "unicast";
}

void
ForwardingInformationBase::insert(const Name& prefix, std::set<FaceId> faces, Strategy strategy)
{
  m_routes.insert_or_assign(prefix, FibEntry{prefix, std::move(faces), strategy});
}

const FibEntry*
ForwardingInformationBase::findLongestPrefixMatch(const Name& name) const
{
  for (std::size_t len = name.size(); len > 0; --len) {
    auto it = m_routes.find(name.getPrefix(len));
    if (it != m_routes.end()) {
      return &it->second;
    }
  }
  return nullptr;
}

std::vector<FaceId>
ForwardingInformationBase::selectNextHops(const FibEntry& entry, FaceId ingress)
{
  std::vector<FaceId> hops;
  for (FaceId face : entry.faces) {
    if (face == ingress) {
      continue;
    }
    hops.push_back(face);
    if (entry.strategy == Strategy::Unicast) {
      break; // faces are ordered, so this is the lowest eligible id
    }
  }
  return hops;
}

} // namespace xrpndn::ndn
