#include "xrpndn/model/xrpl-app.hpp"

#include <stdexcept>

namespace xrpndn::model {

namespace {

Bytes
encodeSeq(LedgerSeq seq)
{
  Bytes out(8);
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seq >> (8 * (7 - i)));
  }
  return out;
}

std::optional<LedgerSeq>
decodeSeq(const Bytes& bytes)
{
  if (bytes.size() != 8) {
    return std::nullopt;
  }
  LedgerSeq seq = 0;
  for (auto b : bytes) {
    seq = (seq << 8) | b;
  }
  return seq;
}

} // namespace

std::string_view
toString(PollSchedule s)
{
  return s == PollSchedule::FixedRate ? "fixed-rate" : "after-response";
}

PollSchedule
parsePollSchedule(std::string_view text)
{
  if (text == "fixed-rate") {
    return PollSchedule::FixedRate;
  }
  if (text == "after-response") {
    return PollSchedule::AfterResponse;
  }
  throw std::invalid_argument("unknown poll schedule '" + std::string(text) + "'");
}

void
ModelParams::validate() const
{
  if (pollInterval <= Duration::zero()) {
    throw std::invalid_argument("model_params.poll_interval_ms: must be positive");
  }
  if (interestLifetime <= Duration::zero()) {
    throw std::invalid_argument("ndn.interest_lifetime_ms: must be positive");
  }
  if (validationFreshness < Duration::zero()) {
    throw std::invalid_argument("ndn.validation_freshness_ms: must be non-negative");
  }
}

std::string_view
toString(JournalKind kind)
{
  switch (kind) {
    case JournalKind::LedgerClose:
      return "ledger-close";
    case JournalKind::ValidationOut:
      return "val-out";
    case JournalKind::ValidationInFirst:
      return "val-in-first";
    case JournalKind::ValidationInDuplicate:
      return "val-in-dup";
    case JournalKind::ValidationInUntrusted:
      return "val-in-untrusted";
  }
  return "unknown";
}

XrplApp::XrplApp(Setup setup)
  : m_setup(std::move(setup))
  , m_validator(m_setup.nodeId, m_setup.validator)
{
  m_setup.params.validate();
  m_setup.producers.erase(m_setup.nodeId);
  for (const auto& producer : m_setup.producers) {
    m_records.emplace(producer, SequenceRecord{});
  }
}

std::vector<JournalEntry>
XrplApp::takeJournal()
{
  return std::exchange(m_journal, {});
}

void
XrplApp::journal(JournalKind kind, TimePoint at, const std::string& producer, LedgerSeq seq,
                 std::uint64_t count)
{
  m_journal.push_back({kind, at, producer, seq, count});
}

ExpressInterest
XrplApp::makeInterest(ndn::Name name, Rng& rng, std::optional<Bytes> appParameters) const
{
  return {ndn::Interest(std::move(name), rng(), m_setup.params.interestLifetime,
                        std::move(appParameters))};
}

ndn::Data
XrplApp::makeValidationData(const xrpl::Validation& val) const
{
  return ndn::Data(makeName(NameKind::Validation, val.validatorId, val.ledgerSeq), xrpl::encode(val),
                   m_setup.params.validationFreshness, m_setup.nodeId);
}

AppActions
XrplApp::start(TimePoint now, Rng& rng)
{
  AppActions actions;
  for (const auto& producer : m_setup.producers) {
    AppActions step;
    switch (m_setup.model) {
      case ModelKind::Polling:
        step = pollingTick(producer, now, rng);
        break;
      case ModelKind::AdvanceRequest:
        step = advanceRequest(producer, now, rng);
        break;
      default:
        break;
    }
    actions.insert(actions.end(), std::make_move_iterator(step.begin()),
                   std::make_move_iterator(step.end()));
  }
  return actions;
}

std::optional<TimePoint>
XrplApp::firstCloseTime(Rng& rng)
{
  if (!m_setup.producing) {
    return std::nullopt;
  }
  return m_validator.firstCloseTime(rng);
}

XrplApp::CloseOutcome
XrplApp::onLedgerClose(TimePoint now, Rng& rng)
{
  if (!m_setup.producing) {
    throw std::logic_error("ledger close on a non-producing node");
  }
  auto [val, next] = m_validator.closeLedger(now, rng);
  journal(JournalKind::LedgerClose, now, m_setup.nodeId, val.ledgerSeq);

  AppActions actions;
  switch (m_setup.model) {
    case ModelKind::Baseline: {
      // closeLedger() accounted for the first copy handed to the transport
      std::uint64_t extra = m_setup.peers.empty() ? 0 : m_setup.peers.size() - 1;
      m_validator.recordSent(extra);
      journal(JournalKind::ValidationOut, now, m_setup.nodeId, val.ledgerSeq, 1 + extra);
      for (const auto& peer : m_setup.peers) {
        actions.emplace_back(SendToPeer{peer, val});
      }
      break;
    }
    case ModelKind::Piggyback:
      journal(JournalKind::ValidationOut, now, m_setup.nodeId, val.ledgerSeq);
      actions = piggybackSend(val, rng);
      break;
    case ModelKind::AnnouncePull:
      journal(JournalKind::ValidationOut, now, m_setup.nodeId, val.ledgerSeq);
      actions = announce(val, rng);
      break;
    case ModelKind::Polling:
      journal(JournalKind::ValidationOut, now, m_setup.nodeId, val.ledgerSeq);
      m_store.emplace(val.ledgerSeq, val);
      break;
    case ModelKind::AdvanceRequest:
      journal(JournalKind::ValidationOut, now, m_setup.nodeId, val.ledgerSeq);
      m_store.emplace(val.ledgerSeq, val);
      if (m_awaitingProduction.erase(val.ledgerSeq) > 0) {
        actions.emplace_back(PutData{makeValidationData(val)});
      }
      break;
  }
  return {std::move(actions), next};
}

AppActions
XrplApp::piggybackSend(const xrpl::Validation& val, Rng& rng)
{
  AppActions actions;
  actions.emplace_back(makeInterest(makeName(NameKind::Piggyback), rng, xrpl::encode(val)));
  return actions;
}

AppActions
XrplApp::announce(const xrpl::Validation& val, Rng& rng)
{
  m_store.emplace(val.ledgerSeq, val);
  AppActions actions;
  actions.emplace_back(makeInterest(makeName(NameKind::Announce, val.validatorId, val.ledgerSeq), rng));
  return actions;
}

AppActions
XrplApp::pollingTick(const std::string& producer, TimePoint, Rng& rng)
{
  auto& rec = m_records.at(producer);
  AppActions actions;
  auto express = makeInterest(makeName(NameKind::LatestSeq, producer), rng);
  Nonce nonce = express.interest.getNonce();
  actions.emplace_back(std::move(express));

  if (m_setup.params.pollSchedule == PollSchedule::FixedRate) {
    actions.emplace_back(StartTimer{m_setup.params.pollInterval, {TimerKind::PollTick, producer}});
  }
  else {
    rec.pollNonce = nonce;
    actions.emplace_back(StartTimer{m_setup.params.interestLifetime,
                                    {TimerKind::PollTimeout, producer, 0, nonce}});
  }
  return actions;
}

AppActions
XrplApp::fetch(const std::string& producer, LedgerSeq seq, Rng& rng)
{
  auto& rec = m_records.at(producer);
  AppActions actions;
  auto express = makeInterest(makeName(NameKind::Validation, producer, seq), rng);
  Nonce nonce = express.interest.getNonce();
  rec.inFlight[seq] = nonce;
  actions.emplace_back(std::move(express));
  actions.emplace_back(StartTimer{m_setup.params.interestLifetime,
                                  {TimerKind::FetchTimeout, producer, seq, nonce}});
  return actions;
}

AppActions
XrplApp::onLatestSeqData(const std::string& producer, LedgerSeq seq, TimePoint, Rng& rng)
{
  auto& rec = m_records.at(producer);
  if (seq <= rec.lastSeenSeq || !rec.inFlight.empty()) {
    return {};
  }
  AppActions actions;
  for (LedgerSeq s = rec.lastSeenSeq + 1; s <= seq; ++s) {
    auto step = fetch(producer, s, rng);
    actions.insert(actions.end(), std::make_move_iterator(step.begin()),
                   std::make_move_iterator(step.end()));
  }
  rec.outstandingRequest = seq;
  return actions;
}

AppActions
XrplApp::advanceRequest(const std::string& producer, TimePoint, Rng& rng)
{
  auto& rec = m_records.at(producer);
  LedgerSeq next = rec.lastSeenSeq + 1;
  AppActions actions;
  auto express = makeInterest(makeName(NameKind::Validation, producer, next), rng);
  Nonce nonce = express.interest.getNonce();
  rec.inFlight.clear();
  rec.inFlight[next] = nonce;
  rec.outstandingRequest = next;
  actions.emplace_back(std::move(express));
  actions.emplace_back(StartTimer{m_setup.params.interestLifetime,
                                  {TimerKind::AdvanceTimeout, producer, next, nonce}});
  return actions;
}

AppActions
XrplApp::deliverToValidator(const xrpl::Validation& val, const std::string& fromPeer, TimePoint now)
{
  auto receipt = m_validator.onValidationReceived(val, now);
  switch (receipt) {
    case xrpl::Receipt::FirstCopy:
      journal(JournalKind::ValidationInFirst, now, val.validatorId, val.ledgerSeq);
      m_arrivals[val.validatorId].push_back(now);
      break;
    case xrpl::Receipt::Duplicate:
      journal(JournalKind::ValidationInDuplicate, now, val.validatorId, val.ledgerSeq);
      break;
    case xrpl::Receipt::Untrusted:
      journal(JournalKind::ValidationInUntrusted, now, val.validatorId, val.ledgerSeq);
      break;
  }

  AppActions actions;
  if (m_setup.model == ModelKind::Baseline) {
    auto targets = m_validator.floodRelay(val, receipt, fromPeer, m_setup.peers);
    if (!targets.empty()) {
      journal(JournalKind::ValidationOut, now, val.validatorId, val.ledgerSeq, targets.size());
    }
    for (const auto& peer : targets) {
      actions.emplace_back(SendToPeer{peer, val});
    }
  }
  return actions;
}

AppActions
XrplApp::onPeerValidation(const xrpl::Validation& val, const std::string& fromPeer, TimePoint now)
{
  return deliverToValidator(val, fromPeer, now);
}

AppActions
XrplApp::serveOwnName(const ParsedName& parsed, TimePoint)
{
  AppActions actions;
  if (parsed.kind == NameKind::LatestSeq) {
    actions.emplace_back(PutData{ndn::Data(makeName(NameKind::LatestSeq, m_setup.nodeId),
                                           encodeSeq(m_validator.currentSeq()),
                                           Duration::zero(), m_setup.nodeId)});
  }
  else if (parsed.kind == NameKind::Validation) {
    auto it = m_store.find(*parsed.seq);
    if (it != m_store.end()) {
      actions.emplace_back(PutData{makeValidationData(it->second)});
    }
    else if (*parsed.seq > m_validator.currentSeq()) {
      m_awaitingProduction.insert(*parsed.seq);
    }
  }
  return actions;
}

AppActions
XrplApp::onInterest(const ndn::Interest& interest, TimePoint now, Rng& rng)
{
  auto parsed = parseName(interest.getName());
  if (!parsed) {
    return {};
  }

  switch (parsed->kind) {
    case NameKind::Piggyback: {
      if (!interest.hasAppParameters()) {
        return {};
      }
      auto val = xrpl::decode(*interest.getAppParameters());
      return deliverToValidator(val, {}, now);
    }
    case NameKind::Announce:
      if (parsed->producer == m_setup.nodeId || m_records.count(parsed->producer) == 0) {
        return {};
      }
      return onLatestSeqData(parsed->producer, *parsed->seq, now, rng);
    case NameKind::LatestSeq:
    case NameKind::Validation:
      if (parsed->producer != m_setup.nodeId || !m_setup.producing) {
        return {};
      }
      return serveOwnName(*parsed, now);
  }
  return {};
}

AppActions
XrplApp::onData(const ndn::Data& data, TimePoint now, Rng& rng)
{
  auto parsed = parseName(data.getName());
  if (!parsed || m_records.count(parsed->producer) == 0) {
    return {};
  }
  auto& rec = m_records.at(parsed->producer);

  if (parsed->kind == NameKind::LatestSeq) {
    AppActions actions;
    if (m_setup.params.pollSchedule == PollSchedule::AfterResponse && rec.pollNonce) {
      rec.pollNonce.reset();
      actions.emplace_back(StartTimer{m_setup.params.pollInterval,
                                      {TimerKind::PollTick, parsed->producer}});
    }
    if (auto seq = decodeSeq(data.getContent())) {
      auto step = onLatestSeqData(parsed->producer, *seq, now, rng);
      actions.insert(actions.end(), std::make_move_iterator(step.begin()),
                     std::make_move_iterator(step.end()));
    }
    return actions;
  }

  if (parsed->kind != NameKind::Validation) {
    return {};
  }
  auto val = xrpl::decode(data.getContent());
  rec.inFlight.erase(*parsed->seq);
  rec.lastSeenSeq = std::max(rec.lastSeenSeq, *parsed->seq);
  if (rec.inFlight.empty()) {
    rec.outstandingRequest.reset();
  }

  AppActions actions = deliverToValidator(val, {}, now);
  if (m_setup.model == ModelKind::AdvanceRequest && rec.inFlight.empty()) {
    auto step = advanceRequest(parsed->producer, now, rng);
    actions.insert(actions.end(), std::make_move_iterator(step.begin()),
                   std::make_move_iterator(step.end()));
  }
  return actions;
}

AppActions
XrplApp::onTimer(const TimerTag& tag, TimePoint now, Rng& rng)
{
  auto it = m_records.find(tag.producer);
  if (it == m_records.end()) {
    return {};
  }
  auto& rec = it->second;

  switch (tag.kind) {
    case TimerKind::PollTick:
      return pollingTick(tag.producer, now, rng);
    case TimerKind::PollTimeout:
      if (rec.pollNonce != tag.nonce) {
        return {};
      }
      rec.pollNonce.reset();
      return {StartTimer{m_setup.params.pollInterval, {TimerKind::PollTick, tag.producer}}};
    case TimerKind::FetchTimeout: {
      auto pending = rec.inFlight.find(tag.seq);
      if (pending == rec.inFlight.end() || pending->second != tag.nonce) {
        return {};
      }
      return fetch(tag.producer, tag.seq, rng);
    }
    case TimerKind::AdvanceTimeout: {
      auto pending = rec.inFlight.find(tag.seq);
      if (pending == rec.inFlight.end() || pending->second != tag.nonce) {
        return {};
      }
      // same seq, fresh nonce
      return advanceRequest(tag.producer, now, rng);
    }
  }
  return {};
}

} // namespace xrpndn::model
