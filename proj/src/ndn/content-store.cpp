#include "xrpndn/ndn/content-store.hpp"

#include <stdexcept>

namespace xrpndn::ndn {

ContentStore::ContentStore(std::size_t capacity)
  : m_capacity(capacity)
{
  if (m_capacity == 0) {
    throw std::invalid_argument("Content Store capacity must be positive");
  }
}

std::optional<Data>
ContentStore::lookup(const Name& name, TimePoint now)
{
  auto it = m_entries.find(name);
  if (it == m_entries.end()) {
    ++m_stats.misses;
    return std::nullopt;
  }
  // expiry is exclusive: freshness 0 is stale at the instant of insertion
  if (it->second.second <= now) {
    erase(it);
    ++m_stats.misses;
    return std::nullopt;
  }
  ++m_stats.hits;
  return it->second.first;
}

void
ContentStore::insert(const Data& data, TimePoint now)
{
  TimePoint expiry = now + data.getFreshness();
  auto it = m_entries.find(data.getName());
  if (it != m_entries.end()) {
    m_evictionOrder.erase({it->second.second, it->first});
    it->second = {data, expiry};
  }
  else {
    it = m_entries.emplace(data.getName(), std::make_pair(data, expiry)).first;
  }
  m_evictionOrder.emplace(expiry, it->first);

  while (m_entries.size() > m_capacity) {
    erase(m_entries.find(m_evictionOrder.begin()->second));
  }
}

void
ContentStore::erase(std::map<Name, std::pair<Data, TimePoint>>::iterator it)
{
  m_evictionOrder.erase({it->second.second, it->first});
  m_entries.erase(it);
}

} // namespace xrpndn::ndn
