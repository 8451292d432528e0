#ifndef XRPNDN_XRPL_VALIDATOR_HPP
#define XRPNDN_XRPL_VALIDATOR_HPP

#include "xrpndn/xrpl/validation.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace xrpndn::xrpl {

struct ValidatorConfig
{
  std::set<std::string> unl;
  std::size_t quorum = 1;
  Duration ledgerInterval = std::chrono::milliseconds(3000);
  Duration intervalJitter = Duration::zero();
  std::uint32_t payloadSize = DEFAULT_VALIDATION_SIZE;

  /// Throws std::invalid_argument naming the offending field.
  void
  validate() const;
};

/// Outcome of receiving a validation message.
enum class Receipt {
  FirstCopy,
  Duplicate,
  Untrusted, ///< sender not in the UNL; dropped like a duplicate, never counted as first copy
};

struct ValidatorCounters
{
  std::uint64_t validationsIn = 0;
  std::uint64_t validationsOut = 0;
  std::uint64_t ledgersCreated = 0;
};

/**
 * \brief Validation-phase state of one XRPL node.
 *
 * Consensus itself is abstracted away: each close produces the next sequence
 * with the agreed hash, and a ledger is validated once `quorum` UNL members
 * (self included) have sent matching validations.
 */
class ValidatorState
{
public:
  struct CloseResult
  {
    Validation validation;
    TimePoint nextCloseTime;
  };

  ValidatorState(std::string id, ValidatorConfig config);

  const std::string&
  id() const noexcept
  {
    return m_id;
  }

  const ValidatorConfig&
  config() const noexcept
  {
    return m_config;
  }

  /// ledger_interval + uniform(-jitter, +jitter) from the start of the run.
  TimePoint
  firstCloseTime(Rng& rng);

  /// Emits the validation for current_seq + 1 and draws the next close time.
  CloseResult
  closeLedger(TimePoint now, Rng& rng);

  Receipt
  onValidationReceived(const Validation& val, TimePoint now);

  /// True once `quorum` trusted validators agree on \p seq; records the first flip.
  bool
  checkQuorum(LedgerSeq seq, TimePoint now);

  /// Flooding: relay a first copy to every peer but the sender and the originator.
  std::set<std::string>
  floodRelay(const Validation& val, Receipt receipt, const std::string& fromPeer,
             const std::set<std::string>& peers);

  /// Extra outgoing copies beyond the first one accounted by closeLedger().
  void
  recordSent(std::uint64_t n)
  {
    m_counters.validationsOut += n;
  }

  LedgerSeq
  currentSeq() const noexcept
  {
    return m_currentSeq;
  }

  const ValidatorCounters&
  counters() const noexcept
  {
    return m_counters;
  }

  const std::vector<std::pair<LedgerSeq, TimePoint>>&
  validatedLedgers() const noexcept
  {
    return m_validatedLedgers;
  }

  bool
  hasSeen(const std::string& validatorId, LedgerSeq seq) const
  {
    return m_seen.count({validatorId, seq}) > 0;
  }

private:
  TimePoint
  drawInterval(TimePoint from, Rng& rng);

private:
  std::string m_id;
  ValidatorConfig m_config;
  LedgerSeq m_currentSeq = 0;
  TimePoint m_scheduledClose{};
  std::set<std::pair<std::string, LedgerSeq>> m_seen;
  /// seq -> trusted validators whose first copy carried the agreed hash
  std::map<LedgerSeq, std::set<std::string>> m_votes;
  std::set<LedgerSeq> m_validatedSeqs;
  std::vector<std::pair<LedgerSeq, TimePoint>> m_validatedLedgers;
  ValidatorCounters m_counters;
};

} // namespace xrpndn::xrpl

#endif // XRPNDN_XRPL_VALIDATOR_HPP
