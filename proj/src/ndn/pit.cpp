#include "xrpndn/ndn/pit.hpp"

namespace xrpndn::ndn {

PitInsertResult
PendingInterestTable::insert(const Interest& interest, FaceId downstream, TimePoint now)
{
  purgeExpired(now);

  auto it = m_entries.find(interest.getName());
  if (it == m_entries.end()) {
    Entry entry{{downstream}, {interest.getNonce()}, now + interest.getLifetime()};
    m_byExpiry.emplace(entry.expiry, interest.getName());
    m_entries.emplace(interest.getName(), std::move(entry));
    return PitInsertResult::New;
  }

  Entry& entry = it->second;
  if (!entry.nonces.insert(interest.getNonce()).second) {
    return PitInsertResult::DuplicateNonce;
  }
  entry.downstreams.insert(downstream);
  return PitInsertResult::Aggregated;
}

std::set<FaceId>
PendingInterestTable::consume(const Name& name, TimePoint now)
{
  purgeExpired(now);

  auto it = m_entries.find(name);
  if (it == m_entries.end()) {
    return {};
  }
  std::set<FaceId> faces = std::move(it->second.downstreams);
  eraseEntry(it);
  return faces;
}

void
PendingInterestTable::erase(const Name& name)
{
  auto it = m_entries.find(name);
  if (it != m_entries.end()) {
    eraseEntry(it);
  }
}

bool
PendingInterestTable::isPending(const Name& name, TimePoint now) const
{
  auto it = m_entries.find(name);
  return it != m_entries.end() && it->second.expiry > now;
}

void
PendingInterestTable::purgeExpired(TimePoint now)
{
  while (!m_byExpiry.empty() && m_byExpiry.begin()->first <= now) {
    m_entries.erase(m_byExpiry.begin()->second);
    m_byExpiry.erase(m_byExpiry.begin());
  }
}

void
PendingInterestTable::eraseEntry(std::map<Name, Entry>::iterator it)
{
  m_byExpiry.erase({it->second.expiry, it->first});
  m_entries.erase(it);
}

bool
DeadNonceList::checkAndRecord(const Name& name, Nonce nonce, TimePoint now, Duration lifetime)
{
  while (!m_byExpiry.empty() && std::get<0>(*m_byExpiry.begin()) <= now) {
    const auto& [expiry, n, k] = *m_byExpiry.begin();
    m_entries.erase({n, k});
    m_byExpiry.erase(m_byExpiry.begin());
  }

  auto key = std::make_pair(name, nonce);
  if (m_entries.count(key) > 0) {
    return true;
  }
  m_entries.emplace(key, now + lifetime);
  m_byExpiry.emplace(now + lifetime, name, nonce);
  return false;
}

} // namespace xrpndn::ndn
