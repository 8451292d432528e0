#ifndef XRPNDN_NDN_PIT_HPP
#define XRPNDN_NDN_PIT_HPP

#include "xrpndn/ndn/packet.hpp"

#include <map>
#include <set>
#include <tuple>

namespace xrpndn::ndn {

enum class PitInsertResult {
  New,            ///< no pending entry existed; the Interest should be forwarded
  Aggregated,     ///< pending entry existed; downstream face recorded, not forwarded
  DuplicateNonce, ///< nonce already seen for this name: a loop
};

/**
 * \brief Pending Interest Table.
 *
 * Each entry expires at creation time + lifetime of the Interest that created
 * it; aggregation does not extend it. Expired entries behave as absent.
 */
class PendingInterestTable
{
public:
  PitInsertResult
  insert(const Interest& interest, FaceId downstream, TimePoint now);

  /// Returns and removes the downstream faces of the entry; empty if none is pending.
  std::set<FaceId>
  consume(const Name& name, TimePoint now);

  /// Removes the entry without returning faces (e.g. after a routing failure).
  void
  erase(const Name& name);

  bool
  isPending(const Name& name, TimePoint now) const;

  /// Number of stored entries, including ones not purged yet.
  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

private:
  struct Entry
  {
    std::set<FaceId> downstreams;
    std::set<Nonce> nonces;
    TimePoint expiry;
  };

  void
  purgeExpired(TimePoint now);

  void
  eraseEntry(std::map<Name, Entry>::iterator it);

private:
  std::map<Name, Entry> m_entries;
  std::set<std::pair<TimePoint, Name>> m_byExpiry;
};

/**
 * \brief Remembers (name, nonce) pairs for a while to drop looping packets
 *        that never enter the PIT (piggybacked Interests).
 */
class DeadNonceList
{
public:
  /// Returns true if the pair was already recorded and unexpired; records it otherwise.
  bool
  checkAndRecord(const Name& name, Nonce nonce, TimePoint now, Duration lifetime);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

private:
  std::map<std::pair<Name, Nonce>, TimePoint> m_entries;
  std::set<std::tuple<TimePoint, Name, Nonce>> m_byExpiry;
};

} // namespace xrpndn::ndn

#endif // XRPNDN_NDN_PIT_HPP
