#ifndef XRPNDN_NDN_CONTENT_STORE_HPP
#define XRPNDN_NDN_CONTENT_STORE_HPP

#include "xrpndn/ndn/packet.hpp"

#include <map>
#include <optional>
#include <set>

namespace xrpndn::ndn {

struct CsStats
{
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

/**
 * \brief Exact-name Data cache with per-entry expiry.
 *
 * An entry stays servable until insertion time + freshness. When the store is
 * over capacity the entry with the earliest expiry is evicted; ties go to the
 * lexicographically smallest name.
 */
class ContentStore
{
public:
  static constexpr std::size_t DEFAULT_CAPACITY = 4096;

  explicit
  ContentStore(std::size_t capacity = DEFAULT_CAPACITY);

  /// Returns the cached packet iff an unexpired entry exists. Counts a hit or a miss.
  std::optional<Data>
  lookup(const Name& name, TimePoint now);

  void
  insert(const Data& data, TimePoint now);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  std::size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

  const CsStats&
  stats() const noexcept
  {
    return m_stats;
  }

  bool
  contains(const Name& name) const
  {
    return m_entries.count(name) > 0;
  }

private:
  void
  erase(std::map<Name, std::pair<Data, TimePoint>>::iterator it);

private:
  std::size_t m_capacity;
  std::map<Name, std::pair<Data, TimePoint>> m_entries;
  std::set<std::pair<TimePoint, Name>> m_evictionOrder;
  CsStats m_stats;
};

} // namespace xrpndn::ndn

#endif // XRPNDN_NDN_CONTENT_STORE_HPP
