#include "xrpndn/model/xrpl-app.hpp"

#include <doctest.h>

using namespace xrpndn;
using namespace xrpndn::model;
using namespace std::chrono_literals;

namespace {

XrplApp
makeApp(ModelKind model, const std::string& id, ModelParams params = {},
        Duration interval = 3s)
{
  XrplApp::Setup s;
  s.model = model;
  s.nodeId = id;
  s.validator = xrpl::ValidatorConfig{{"A", "B", "C"}, 3, interval, 0s, 500};
  s.params = params;
  s.producers = {"A", "B", "C"};
  if (model == ModelKind::Baseline) {
    for (const auto& p : s.producers) {
      if (p != id) {
        s.peers.insert(p);
      }
    }
  }
  return XrplApp(std::move(s));
}

template<typename T>
std::vector<T>
actionsOf(const AppActions& actions)
{
  std::vector<T> out;
  for (const auto& a : actions) {
    if (auto* x = std::get_if<T>(&a)) {
      out.push_back(*x);
    }
  }
  return out;
}

std::vector<std::string>
interestNames(const AppActions& actions)
{
  std::vector<std::string> out;
  for (const auto& e : actionsOf<ExpressInterest>(actions)) {
    out.push_back(e.interest.getName().toUri());
  }
  return out;
}

ndn::Data
validationData(const std::string& producer, LedgerSeq seq)
{
  xrpl::Validation v{producer, seq, xrpl::ledgerHashFor(seq), 0s, 500};
  return ndn::Data(makeName(NameKind::Validation, producer, seq), xrpl::encode(v), 10s, producer);
}

ndn::Data
latestData(const std::string& producer, LedgerSeq seq)
{
  Bytes content(8);
  for (int i = 0; i < 8; ++i) {
    content[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seq >> (8 * (7 - i)));
  }
  return ndn::Data(makeName(NameKind::LatestSeq, producer), content, 0s, producer);
}

/// Brings consumer's view of \p producer to lastSeenSeq == \p seq.
void
catchUp(XrplApp& app, const std::string& producer, LedgerSeq seq, Rng& rng)
{
  app.onLatestSeqData(producer, seq, 0s, rng);
  for (LedgerSeq s = 1; s <= seq; ++s) {
    app.onData(validationData(producer, s), 0s, rng);
  }
  REQUIRE(app.sequenceRecord(producer).lastSeenSeq == seq);
}

} // namespace

TEST_SUITE("XrplApp") {

TEST_CASE("fixed-rate polling ticks every interval")
{
  ModelParams params;
  params.pollSchedule = PollSchedule::FixedRate;
  auto app = makeApp(ModelKind::Polling, "A", params);
  Rng rng(1);

  std::vector<Duration> ticks;
  TimePoint now = 0s;
  auto actions = app.pollingTick("B", now, rng);
  for (int i = 0; i < 3; ++i) {
    CHECK(interestNames(actions) == std::vector<std::string>{"/xrpl/B/latest"});
    ticks.push_back(now);
    auto timers = actionsOf<StartTimer>(actions);
    REQUIRE(timers.size() == 1);
    CHECK(timers[0].tag.kind == TimerKind::PollTick);
    now += timers[0].delay;
    actions = app.onTimer(timers[0].tag, now, rng);
  }
  CHECK(ticks == std::vector<Duration>{0ms, 200ms, 400ms});
}

TEST_CASE("after-response polling re-arms on the answer")
{
  auto app = makeApp(ModelKind::Polling, "A");
  Rng rng(1);
  auto start = app.start(0s, rng);
  CHECK(interestNames(start) == std::vector<std::string>{"/xrpl/B/latest", "/xrpl/C/latest"});

  auto answered = app.onData(latestData("B", 0), 20ms, rng);
  CHECK(interestNames(answered).empty());
  auto timers = actionsOf<StartTimer>(answered);
  REQUIRE(timers.size() == 1);
  CHECK(timers[0].delay == 200ms);
  CHECK(timers[0].tag.kind == TimerKind::PollTick);
}

TEST_CASE("unchanged or increased latest sequence")
{
  auto app = makeApp(ModelKind::Polling, "A");
  Rng rng(1);
  catchUp(app, "B", 5, rng);

  CHECK(interestNames(app.onLatestSeqData("B", 5, 1s, rng)).empty());
  CHECK(interestNames(app.onLatestSeqData("B", 6, 1s, rng)) ==
        std::vector<std::string>{"/xrpl/B/val/6"});
}

TEST_CASE("gap fill fetches every missing sequence")
{
  auto app = makeApp(ModelKind::Polling, "A");
  Rng rng(1);
  catchUp(app, "B", 5, rng);
  CHECK(interestNames(app.onLatestSeqData("B", 8, 1s, rng)) ==
        std::vector<std::string>{"/xrpl/B/val/6", "/xrpl/B/val/7", "/xrpl/B/val/8"});
  CHECK(app.sequenceRecord("B").outstandingRequest == 8u);
  // nothing new while the batch is in flight
  CHECK(interestNames(app.onLatestSeqData("B", 9, 1s, rng)).empty());
}

TEST_CASE("stale answer issues nothing")
{
  auto app = makeApp(ModelKind::Polling, "A");
  Rng rng(1);
  catchUp(app, "B", 5, rng);
  CHECK(interestNames(app.onLatestSeqData("B", 4, 1s, rng)).empty());
}

TEST_CASE("producer answers latest and stored validations")
{
  auto app = makeApp(ModelKind::Polling, "B");
  Rng rng(1);
  app.firstCloseTime(rng);
  app.onLedgerClose(3s, rng);

  auto latest = actionsOf<PutData>(
    app.onInterest(ndn::Interest(makeName(NameKind::LatestSeq, "B"), 1), 3s, rng));
  REQUIRE(latest.size() == 1);
  CHECK(latest[0].data.getContent() == latestData("B", 1).getContent());
  CHECK(latest[0].data.getFreshness() == 0s);

  auto val = actionsOf<PutData>(
    app.onInterest(ndn::Interest(makeName(NameKind::Validation, "B", 1), 2), 3s, rng));
  REQUIRE(val.size() == 1);
  CHECK(xrpl::decode(val[0].data.getContent()).ledgerSeq == 1);
}

TEST_CASE("announce then pull")
{
  auto producer = makeApp(ModelKind::AnnouncePull, "A");
  Rng rng(1);
  producer.firstCloseTime(rng);
  auto closed = producer.onLedgerClose(3s, rng);
  CHECK(interestNames(closed.actions) == std::vector<std::string>{"/xrpl/announce/A/1"});

  auto consumer = makeApp(ModelKind::AnnouncePull, "B");
  catchUp(consumer, "A", 6, rng);
  auto pulled = consumer.onInterest(ndn::Interest(makeName(NameKind::Announce, "A", 7), 9), 21s, rng);
  CHECK(interestNames(pulled) == std::vector<std::string>{"/xrpl/A/val/7"});
  // the producer ignores its own announce
  CHECK(producer.onInterest(ndn::Interest(makeName(NameKind::Announce, "A", 1), 9), 3s, rng).empty());
}

TEST_CASE("advance request served on production")
{
  auto consumer = makeApp(ModelKind::AdvanceRequest, "B");
  auto producer = makeApp(ModelKind::AdvanceRequest, "A");
  Rng rng(1);

  auto first = consumer.start(0s, rng);
  auto names = interestNames(first);
  CHECK(std::find(names.begin(), names.end(), "/xrpl/A/val/1") != names.end());

  // before the ledger exists the producer parks the request
  CHECK(producer.onInterest(ndn::Interest(makeName(NameKind::Validation, "A", 1), 5), 0s, rng).empty());
  producer.firstCloseTime(rng);
  auto closed = producer.onLedgerClose(3s, rng);
  auto served = actionsOf<PutData>(closed.actions);
  REQUIRE(served.size() == 1);
  CHECK(served[0].data.getName().toUri() == "/xrpl/A/val/1");

  auto next = consumer.onData(served[0].data, 3s + 10ms, rng);
  CHECK(interestNames(next) == std::vector<std::string>{"/xrpl/A/val/2"});
  CHECK(consumer.arrivals().at("A") == std::vector<TimePoint>{3s + 10ms});
}

TEST_CASE("advance request times out once before a late ledger")
{
  auto consumer = makeApp(ModelKind::AdvanceRequest, "B", {}, 5s);
  Rng rng(1);
  auto start = consumer.advanceRequest("A", 0s, rng);
  auto timers = actionsOf<StartTimer>(start);
  REQUIRE(timers.size() == 1);
  CHECK(timers[0].delay == 4s);
  Nonce firstNonce = actionsOf<ExpressInterest>(start)[0].interest.getNonce();

  int reissues = 0;
  auto retry = consumer.onTimer(timers[0].tag, 4s, rng);
  auto again = actionsOf<ExpressInterest>(retry);
  REQUIRE(again.size() == 1);
  ++reissues;
  CHECK(again[0].interest.getName().toUri() == "/xrpl/A/val/1");
  CHECK(again[0].interest.getNonce() != firstNonce);

  // ledger at 5 s: Data satisfies the re-issued request; its timer is now stale
  consumer.onData(validationData("A", 1), 5s, rng);
  auto retryTimers = actionsOf<StartTimer>(retry);
  REQUIRE(retryTimers.size() == 1);
  CHECK(actionsOf<ExpressInterest>(consumer.onTimer(retryTimers[0].tag, 8s, rng)).size() == 0);
  CHECK(reissues == 1);
  CHECK(consumer.sequenceRecord("A").lastSeenSeq == 1);
}

TEST_CASE("piggyback carries the full validation")
{
  auto app = makeApp(ModelKind::Piggyback, "A");
  Rng rng(1);
  app.firstCloseTime(rng);
  auto closed = app.onLedgerClose(3s, rng);
  auto sent = actionsOf<ExpressInterest>(closed.actions);
  REQUIRE(sent.size() == 1);
  CHECK(sent[0].interest.getName().toUri() == "/xrpl/piggyback");
  REQUIRE(sent[0].interest.hasAppParameters());
  CHECK(sent[0].interest.getAppParameters()->size() == 500);

  auto receiver = makeApp(ModelKind::Piggyback, "B");
  // no application-level relay: multicast already forwards
  CHECK(receiver.onInterest(sent[0].interest, 3s + 10ms, rng).empty());
  CHECK(receiver.validator().counters().validationsIn == 1);
  CHECK(receiver.arrivals().at("A").size() == 1);
}

TEST_CASE("baseline sends to every peer and relays first copies")
{
  auto a = makeApp(ModelKind::Baseline, "A");
  Rng rng(1);
  a.firstCloseTime(rng);
  auto closed = a.onLedgerClose(3s, rng);
  auto sends = actionsOf<SendToPeer>(closed.actions);
  REQUIRE(sends.size() == 2);
  CHECK(a.validator().counters().validationsOut == 2);

  auto b = makeApp(ModelKind::Baseline, "B");
  auto relay = actionsOf<SendToPeer>(b.onPeerValidation(sends[0].validation, "A", 3s));
  REQUIRE(relay.size() == 1);
  CHECK(relay[0].peer == "C");
  CHECK(b.onPeerValidation(sends[0].validation, "C", 3s).empty());
  CHECK(b.validator().counters().validationsIn == 2);
  CHECK(b.validator().counters().validationsOut == 1);

  auto journal = b.takeJournal();
  REQUIRE(journal.size() == 3);
  CHECK((journal[0].kind == JournalKind::ValidationInFirst));
  CHECK((journal[1].kind == JournalKind::ValidationOut));
  CHECK((journal[2].kind == JournalKind::ValidationInDuplicate));
  CHECK(b.takeJournal().empty());
}

} // TEST_SUITE
