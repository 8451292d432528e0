#include "xrpndn/xrpl/validator.hpp"

#include <stdexcept>

namespace xrpndn::xrpl {

void
ValidatorConfig::validate() const
{
  if (unl.empty()) {
    throw std::invalid_argument("validator.unl: must not be empty");
  }
  if (quorum == 0 || quorum > unl.size()) {
    throw std::invalid_argument("validator.quorum: must be in 1..|unl| (" +
                                std::to_string(unl.size()) + ")");
  }
  if (ledgerInterval - intervalJitter <= Duration::zero() || intervalJitter < Duration::zero()) {
    throw std::invalid_argument("validator.interval_jitter_s: need 0 <= jitter < ledger interval");
  }
  if (payloadSize == 0) {
    throw std::invalid_argument("validator.payload_size: must be positive");
  }
}

ValidatorState::ValidatorState(std::string id, ValidatorConfig config)
  : m_id(std::move(id))
  , m_config(std::move(config))
{
  m_config.validate();
}

TimePoint
ValidatorState::drawInterval(TimePoint from, Rng& rng)
{
  Duration offset = m_config.ledgerInterval;
  if (m_config.intervalJitter > Duration::zero()) {
    auto j = m_config.intervalJitter.count();
    offset += Duration(std::uniform_int_distribution<Duration::rep>(-j, j)(rng));
  }
  return from + offset;
}

TimePoint
ValidatorState::firstCloseTime(Rng& rng)
{
  m_scheduledClose = drawInterval(TimePoint::zero(), rng);
  return m_scheduledClose;
}

ValidatorState::CloseResult
ValidatorState::closeLedger(TimePoint now, Rng& rng)
{
  if (now < m_scheduledClose) {
    throw std::logic_error("ledger closed before its scheduled time");
  }

  Validation val;
  val.validatorId = m_id;
  val.ledgerSeq = ++m_currentSeq;
  val.ledgerHash = ledgerHashFor(val.ledgerSeq);
  val.createdAt = now;
  val.payloadSize = m_config.payloadSize;

  ++m_counters.ledgersCreated;
  ++m_counters.validationsOut;
  m_seen.emplace(m_id, val.ledgerSeq);
  m_votes[val.ledgerSeq].insert(m_id);
  checkQuorum(val.ledgerSeq, now);

  m_scheduledClose = drawInterval(now, rng);
  return {std::move(val), m_scheduledClose};
}

Receipt
ValidatorState::onValidationReceived(const Validation& val, TimePoint now)
{
  ++m_counters.validationsIn;
  if (m_config.unl.count(val.validatorId) == 0) {
    return Receipt::Untrusted;
  }
  if (!m_seen.emplace(val.validatorId, val.ledgerSeq).second) {
    return Receipt::Duplicate;
  }
  if (val.ledgerHash == ledgerHashFor(val.ledgerSeq)) {
    m_votes[val.ledgerSeq].insert(val.validatorId);
  }
  checkQuorum(val.ledgerSeq, now);
  return Receipt::FirstCopy;
}

bool
ValidatorState::checkQuorum(LedgerSeq seq, TimePoint now)
{
  if (m_validatedSeqs.count(seq) > 0) {
    return true;
  }
  auto it = m_votes.find(seq);
  if (it == m_votes.end() || it->second.size() < m_config.quorum) {
    return false;
  }
  m_validatedSeqs.insert(seq);
  if (m_validatedLedgers.empty() || m_validatedLedgers.back().first < seq) {
    m_validatedLedgers.emplace_back(seq, now);
  }
  return true;
}

std::set<std::string>
ValidatorState::floodRelay(const Validation& val, Receipt receipt, const std::string& fromPeer,
                           const std::set<std::string>& peers)
{
  if (receipt != Receipt::FirstCopy) {
    return {};
  }
  std::set<std::string> targets = peers;
  targets.erase(fromPeer);
  targets.erase(val.validatorId);
  m_counters.validationsOut += targets.size();
  return targets;
}

} // namespace xrpndn::xrpl
