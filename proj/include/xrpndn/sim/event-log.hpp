#ifndef XRPNDN_SIM_EVENT_LOG_HPP
#define XRPNDN_SIM_EVENT_LOG_HPP

#include "xrpndn/common.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xrpndn::sim {

enum class RecordKind {
  // packets put on a link
  Interest,
  Data,
  Validation, ///< peer-to-peer validation message (baseline)
  // application journal
  LedgerClose,
  ValidationOut,
  ValidationInFirst,
  ValidationInDuplicate,
  ValidationInUntrusted,
  // end-of-run Content Store counters
  CsHits,
  CsMisses,
  CsEntries,
};

std::string_view
toString(RecordKind kind);

RecordKind
parseRecordKind(std::string_view text);

bool
isPacket(RecordKind kind) noexcept;

/**
 * \brief One line of the event log.
 *
 * Packets: \c from / \c to are the link endpoints, \c name the NDN name (or
 * "<producer>/<seq>" for a peer message) and \c size the encoded bytes.
 * Application records: \c from is the node, \c name is "<producer>/<seq>" and
 * \c size a count. Content Store records: \c from is the node, \c size the value.
 */
struct EventRecord
{
  TimePoint time;
  RecordKind kind;
  std::optional<std::size_t> link;
  std::string from;
  std::string to;
  std::string name;
  std::uint64_t size = 0;

  /// Producer and seq of an application record.
  std::pair<std::string, LedgerSeq>
  producerAndSeq() const;

  bool
  operator==(const EventRecord&) const = default;
};

class EventLogError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Append-only record of a run; every reported metric is derived from it.
class EventLog
{
public:
  static constexpr std::string_view CSV_HEADER = "time_s,kind,link,from,to,name,bytes";

  void
  append(EventRecord r)
  {
    m_records.push_back(std::move(r));
  }

  const std::vector<EventRecord>&
  records() const noexcept
  {
    return m_records;
  }

  std::size_t
  size() const noexcept
  {
    return m_records.size();
  }

  void
  writeCsv(std::ostream& os) const;

  /// Parses a log written by writeCsv(). Throws EventLogError on malformed input.
  static EventLog
  readCsv(std::istream& is);

private:
  std::vector<EventRecord> m_records;
};

/// Seconds with exactly 9 decimals, so integer-nanosecond times round-trip.
std::string
formatSeconds(TimePoint t);

/// Parses a non-negative decimal seconds value; more than 9 decimals round to the nanosecond.
/// Throws EventLogError.
TimePoint
parseSeconds(std::string_view text);

} // namespace xrpndn::sim

#endif // XRPNDN_SIM_EVENT_LOG_HPP
