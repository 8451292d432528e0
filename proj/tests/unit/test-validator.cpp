#include "xrpndn/xrpl/validator.hpp"

#include <doctest.h>

using namespace xrpndn;
using namespace xrpndn::xrpl;
using namespace std::chrono_literals;

namespace {

ValidatorConfig
trio(std::size_t quorum = 3, Duration interval = 3s, Duration jitter = 0s)
{
  return ValidatorConfig{{"A", "B", "C"}, quorum, interval, jitter, DEFAULT_VALIDATION_SIZE};
}

Validation
from(const std::string& id, LedgerSeq seq)
{
  return Validation{id, seq, ledgerHashFor(seq), 0s, DEFAULT_VALIDATION_SIZE};
}

} // namespace

TEST_SUITE("ValidatorState") {

TEST_CASE("config validation names the field")
{
  auto bad = trio();
  bad.quorum = 4;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("validator.quorum"), std::invalid_argument);
  bad = trio(3, 3s, 3s);
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("jitter"), std::invalid_argument);
  bad = trio();
  bad.unl.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("fixed interval closes exactly every 3 s starting at seq 1")
{
  ValidatorState v("A", trio());
  Rng rng(1);
  auto t = v.firstCloseTime(rng);
  CHECK(t == 3s);
  for (LedgerSeq expected = 1; expected <= 5; ++expected) {
    auto [val, next] = v.closeLedger(t, rng);
    CHECK(val.ledgerSeq == expected);
    CHECK(val.validatorId == "A");
    CHECK(next - t == 3s);
    t = next;
  }
  CHECK(v.counters().ledgersCreated == 5);
  CHECK(v.counters().validationsOut == 5);
}

TEST_CASE("jittered interval stays within bounds")
{
  ValidatorState v("A", trio(3, 4s, 1s));
  Rng rng(42);
  auto t = v.firstCloseTime(rng);
  CHECK(t >= 3s);
  CHECK(t <= 5s);
  for (int i = 0; i < 500; ++i) {
    auto next = v.closeLedger(t, rng).nextCloseTime;
    CHECK(next - t >= 3s);
    CHECK(next - t <= 5s);
    t = next;
  }
}

TEST_CASE("early close is a logic error")
{
  ValidatorState v("A", trio());
  Rng rng(1);
  v.firstCloseTime(rng);
  CHECK_THROWS_AS(v.closeLedger(1s, rng), std::logic_error);
}

TEST_CASE("first copy, duplicate, untrusted")
{
  ValidatorState v("B", trio());
  CHECK(v.onValidationReceived(from("A", 7), 1s) == Receipt::FirstCopy);
  CHECK(v.hasSeen("A", 7));
  CHECK(v.onValidationReceived(from("A", 7), 2s) == Receipt::Duplicate);
  CHECK(v.onValidationReceived(from("Z", 7), 2s) == Receipt::Untrusted);
  CHECK_FALSE(v.hasSeen("Z", 7));
  CHECK(v.counters().validationsIn == 3);
}

TEST_CASE("quorum of three")
{
  ValidatorState v("A", trio());
  Rng rng(1);
  v.firstCloseTime(rng);
  v.closeLedger(3s, rng);
  v.onValidationReceived(from("B", 1), 3s + 10ms);
  CHECK_FALSE(v.checkQuorum(1, 3s + 10ms));
  CHECK(v.validatedLedgers().empty());

  v.onValidationReceived(from("C", 1), 3s + 20ms);
  CHECK(v.checkQuorum(1, 3s + 20ms));
  REQUIRE(v.validatedLedgers().size() == 1);
  CHECK(v.validatedLedgers()[0].first == 1);
  CHECK(v.validatedLedgers()[0].second == 3s + 20ms);
}

TEST_CASE("mismatched hash does not count")
{
  ValidatorState v("A", trio());
  Rng rng(1);
  v.firstCloseTime(rng);
  v.closeLedger(3s, rng);
  v.onValidationReceived(from("B", 1), 3s);
  auto forged = from("C", 1);
  forged.ledgerHash[0] ^= 0xff;
  CHECK(v.onValidationReceived(forged, 3s) == Receipt::FirstCopy);
  CHECK_FALSE(v.checkQuorum(1, 3s));
}

TEST_CASE("flood relay on a fully connected trio")
{
  ValidatorState y("Y", ValidatorConfig{{"X", "Y", "Z"}, 3, 3s, 0s, 500});
  std::set<std::string> peers{"X", "Z"};
  auto val = Validation{"X", 1, ledgerHashFor(1), 0s, 500};

  auto r1 = y.onValidationReceived(val, 1s);
  CHECK(y.floodRelay(val, r1, "X", peers) == std::set<std::string>{"Z"});

  auto r2 = y.onValidationReceived(val, 2s);
  CHECK(r2 == Receipt::Duplicate);
  CHECK(y.floodRelay(val, r2, "Z", peers).empty());
  CHECK(y.counters().validationsOut == 1);
}

} // TEST_SUITE
