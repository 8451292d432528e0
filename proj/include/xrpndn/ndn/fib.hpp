#ifndef XRPNDN_NDN_FIB_HPP
#define XRPNDN_NDN_FIB_HPP

#include "xrpndn/ndn/name.hpp"
#include "xrpndn/common.hpp"

#include <map>
#include <set>
#include <string_view>
#include <vector>

namespace xrpndn::ndn {

enum class Strategy {
  Unicast,   ///< forward on exactly one face: the lowest eligible face id
  Multicast, ///< forward on every face except the ingress
};

std::string_view
toString(Strategy s);

struct FibEntry
{
  Name prefix;
  std::set<FaceId> faces;
  Strategy strategy = Strategy::Unicast;
};

class ForwardingInformationBase
{
public:
  /// Registers (or replaces) the route for \p prefix.
  void
  insert(const Name& prefix, std::set<FaceId> faces, Strategy strategy);

  /// Longest-prefix match; nullptr when no registered prefix matches.
  const FibEntry*
  findLongestPrefixMatch(const Name& name) const;

  /// Faces the strategy of \p entry forwards to, never including \p ingress.
  static std::vector<FaceId>
  selectNextHops(const FibEntry& entry, FaceId ingress);

  std::size_t
  size() const noexcept
  {
    return m_routes.size();
  }

  const std::map<Name, FibEntry>&
  routes() const noexcept
  {
    return m_routes;
  }

private:
  std::map<Name, FibEntry> m_routes;
};

} // namespace xrpndn::ndn

#endif // XRPNDN_NDN_FIB_HPP
