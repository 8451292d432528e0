#ifndef XRPNDN_MODEL_XRPL_APP_HPP
#define XRPNDN_MODEL_XRPL_APP_HPP

#include "xrpndn/model/names.hpp"
#include "xrpndn/ndn/packet.hpp"
#include "xrpndn/xrpl/validator.hpp"

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace xrpndn::model {

enum class PollSchedule {
  /// next poll is armed poll_interval after the previous answer (a sequential poll loop)
  AfterResponse,
  /// polls fire every poll_interval regardless of answers
  FixedRate,
};

std::string_view
toString(PollSchedule s);

PollSchedule
parsePollSchedule(std::string_view text);

struct ModelParams
{
  Duration pollInterval = std::chrono::milliseconds(200);
  PollSchedule pollSchedule = PollSchedule::AfterResponse;
  Duration interestLifetime = ndn::DEFAULT_INTEREST_LIFETIME;
  Duration validationFreshness = std::chrono::seconds(10);

  void
  validate() const;
};

enum class TimerKind {
  PollTick,
  PollTimeout,
  FetchTimeout,
  AdvanceTimeout,
};

struct TimerTag
{
  TimerKind kind;
  std::string producer;
  LedgerSeq seq = 0;
  Nonce nonce = 0;
};

/// Interest handed to the local forwarder on face 0.
struct ExpressInterest
{
  ndn::Interest interest;
};

/// Data handed to the local forwarder on face 0.
struct PutData
{
  ndn::Data data;
};

/// Baseline only: direct peer-link message.
struct SendToPeer
{
  std::string peer;
  xrpl::Validation validation;
};

struct StartTimer
{
  Duration delay;
  TimerTag tag;
};

using AppAction = std::variant<ExpressInterest, PutData, SendToPeer, StartTimer>;
using AppActions = std::vector<AppAction>;

enum class JournalKind {
  LedgerClose,
  ValidationOut,
  ValidationInFirst,
  ValidationInDuplicate,
  ValidationInUntrusted,
};

std::string_view
toString(JournalKind kind);

/// Application-level event, exported to the event log so M1/M3 can be recomputed from it.
struct JournalEntry
{
  JournalKind kind;
  TimePoint at;
  std::string producer;
  LedgerSeq seq = 0;
  std::uint64_t count = 1;
};

/// Consumer-side view of one remote producer.
struct SequenceRecord
{
  LedgerSeq lastSeenSeq = 0;
  /// highest seq of the current fetch batch, while any fetch is in flight
  std::optional<LedgerSeq> outstandingRequest;
  /// seq -> nonce of the in-flight Interest for it
  std::map<LedgerSeq, Nonce> inFlight;
  /// nonce of the unanswered latest-seq poll
  std::optional<Nonce> pollNonce;
};

/**
 * \brief The XRPL node bound to one dissemination model.
 *
 * Handlers are event-driven and return actions for the simulator to execute;
 * the application never touches links or other nodes directly. A
 * non-producing instance acts as a pure listener (observer).
 */
class XrplApp
{
public:
  struct Setup
  {
    ModelKind model = ModelKind::Piggyback;
    std::string nodeId;
    xrpl::ValidatorConfig validator;
    ModelParams params;
    bool producing = true;
    /// validators this node consumes from (excluding itself)
    std::set<std::string> producers;
    /// Baseline: directly connected XRPL peers
    std::set<std::string> peers;
  };

  explicit
  XrplApp(Setup setup);

  AppActions
  start(TimePoint now, Rng& rng);

  /// Time of the first ledger close, or nullopt for a non-producing node.
  std::optional<TimePoint>
  firstCloseTime(Rng& rng);

  struct CloseOutcome
  {
    AppActions actions;
    TimePoint nextCloseTime;
  };

  CloseOutcome
  onLedgerClose(TimePoint now, Rng& rng);

  AppActions
  onInterest(const ndn::Interest& interest, TimePoint now, Rng& rng);

  AppActions
  onData(const ndn::Data& data, TimePoint now, Rng& rng);

  AppActions
  onPeerValidation(const xrpl::Validation& val, const std::string& fromPeer, TimePoint now);

  AppActions
  onTimer(const TimerTag& tag, TimePoint now, Rng& rng);

public: // model steps, exposed for unit tests
  /// Polls /xrpl/<producer>/latest.
  AppActions
  pollingTick(const std::string& producer, TimePoint now, Rng& rng);

  /// Fetches every missing seq up to \p seq unless a fetch is outstanding or \p seq is stale.
  AppActions
  onLatestSeqData(const std::string& producer, LedgerSeq seq, TimePoint now, Rng& rng);

  /// Publishes a fresh validation as an announce Interest.
  AppActions
  announce(const xrpl::Validation& val, Rng& rng);

  /// Pre-requests the next validation of \p producer.
  AppActions
  advanceRequest(const std::string& producer, TimePoint now, Rng& rng);

  /// Ships a fresh validation inside a multicast Interest.
  AppActions
  piggybackSend(const xrpl::Validation& val, Rng& rng);

  /// Hands a validation to the XRPL node; Baseline relays first copies.
  AppActions
  deliverToValidator(const xrpl::Validation& val, const std::string& fromPeer, TimePoint now);

public:
  const std::string&
  nodeId() const noexcept
  {
    return m_setup.nodeId;
  }

  ModelKind
  model() const noexcept
  {
    return m_setup.model;
  }

  bool
  isProducing() const noexcept
  {
    return m_setup.producing;
  }

  const xrpl::ValidatorState&
  validator() const noexcept
  {
    return m_validator;
  }

  const SequenceRecord&
  sequenceRecord(const std::string& producer) const
  {
    return m_records.at(producer);
  }

  /// First-copy arrival times per producer.
  const std::map<std::string, std::vector<TimePoint>>&
  arrivals() const noexcept
  {
    return m_arrivals;
  }

  /// Returns and clears the pending journal entries.
  std::vector<JournalEntry>
  takeJournal();

private:
  ExpressInterest
  makeInterest(ndn::Name name, Rng& rng, std::optional<Bytes> appParameters = std::nullopt) const;

  AppActions
  fetch(const std::string& producer, LedgerSeq seq, Rng& rng);

  AppActions
  serveOwnName(const ParsedName& parsed, TimePoint now);

  ndn::Data
  makeValidationData(const xrpl::Validation& val) const;

  void
  journal(JournalKind kind, TimePoint at, const std::string& producer, LedgerSeq seq,
          std::uint64_t count = 1);

private:
  Setup m_setup;
  xrpl::ValidatorState m_validator;
  std::map<std::string, SequenceRecord> m_records;
  /// own validations, served to pull-based consumers
  std::map<LedgerSeq, xrpl::Validation> m_store;
  /// requested seqs not produced yet (advance requests)
  std::set<LedgerSeq> m_awaitingProduction;
  std::map<std::string, std::vector<TimePoint>> m_arrivals;
  std::vector<JournalEntry> m_journal;
};

} // namespace xrpndn::model

#endif // XRPNDN_MODEL_XRPL_APP_HPP
