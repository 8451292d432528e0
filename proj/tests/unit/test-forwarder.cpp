#include "xrpndn/ndn/forwarder.hpp"

#include <doctest.h>

using namespace xrpndn;
using namespace xrpndn::ndn;
using namespace std::chrono_literals;

namespace {

template<typename T>
std::vector<T>
effectsOf(const Effects& effects)
{
  std::vector<T> out;
  for (const auto& e : effects) {
    if (auto* x = std::get_if<T>(&e)) {
      out.push_back(*x);
    }
  }
  return out;
}

Data
makeData(const Name& name)
{
  return Data(name, Bytes{42}, 10s, "D");
}

// faces of router C toward consumers A, B and producer D
constexpr FaceId FACE_A = 1;
constexpr FaceId FACE_B = 2;
constexpr FaceId FACE_D = 3;

} // namespace

TEST_SUITE("Forwarder") {

TEST_CASE("consumer-router-producer exchange with caching")
{
  Forwarder c("C", false);
  c.fib().insert(Name::fromUri("/d"), {FACE_D}, Strategy::Unicast);
  Name name = Name::fromUri("/d/video/1");

  auto e1 = c.onInterest(Interest(name, 100), FACE_A, 0s);
  REQUIRE(e1.size() == 1);
  auto sent = effectsOf<SendInterest>(e1);
  REQUIRE(sent.size() == 1);
  CHECK(sent[0].face == FACE_D);

  auto e2 = c.onData(makeData(name), FACE_D, 10ms);
  REQUIRE(e2.size() == 2);
  CHECK(std::holds_alternative<StoreInCs>(e2[0]));
  auto back = effectsOf<SendData>(e2);
  REQUIRE(back.size() == 1);
  CHECK(back[0].face == FACE_A);

  // B asks later: answered from the CS, D is not contacted
  auto e3 = c.onInterest(Interest(name, 200), FACE_B, 20ms);
  REQUIRE(e3.size() == 1);
  auto cached = effectsOf<SendData>(e3);
  REQUIRE(cached.size() == 1);
  CHECK(cached[0].face == FACE_B);
  CHECK(c.cs().stats().hits == 1);
}

TEST_CASE("aggregated interests share one data")
{
  Forwarder c("C", false);
  c.fib().insert(Name::fromUri("/d"), {FACE_D}, Strategy::Unicast);
  Name name = Name::fromUri("/d/x");

  CHECK(effectsOf<SendInterest>(c.onInterest(Interest(name, 1), FACE_A, 0s)).size() == 1);
  CHECK(c.onInterest(Interest(name, 2), FACE_B, 0s).empty());

  auto out = effectsOf<SendData>(c.onData(makeData(name), FACE_D, 1ms));
  REQUIRE(out.size() == 2);
  CHECK(out[0].face == FACE_A);
  CHECK(out[1].face == FACE_B);
}

TEST_CASE("looping interest is dropped")
{
  Forwarder c("C", false);
  c.fib().insert(Name::fromUri("/d"), {FACE_D}, Strategy::Unicast);
  Interest i(Name::fromUri("/d/x"), 9);
  c.onInterest(i, FACE_A, 0s);
  auto e = c.onInterest(i, FACE_B, 1ms);
  REQUIRE(e.size() == 1);
  CHECK((std::get<Drop>(e[0]).reason == DropReason::DuplicateNonce));
}

TEST_CASE("unsolicited data is dropped and not cached")
{
  Forwarder c("C", false);
  auto e = c.onData(makeData(Name::fromUri("/d/x")), FACE_D, 0s);
  REQUIRE(e.size() == 1);
  CHECK((std::get<Drop>(e[0]).reason == DropReason::Unsolicited));
  CHECK(c.cs().size() == 0);
}

TEST_CASE("no route")
{
  Forwarder c("C", false);
  auto e = c.onInterest(Interest(Name::fromUri("/z"), 1), FACE_A, 0s);
  REQUIRE(e.size() == 1);
  CHECK((std::get<Drop>(e[0]).reason == DropReason::NoRoute));
  CHECK_FALSE(c.pit().isPending(Name::fromUri("/z"), 0s));
}

TEST_CASE("piggyback interest is delivered and flooded except ingress")
{
  Forwarder n("N", true);
  n.fib().insert(Name::fromUri("/xrpl/piggyback"), {1, 2}, Strategy::Multicast);
  Interest i(Name::fromUri("/xrpl/piggyback"), 5, 4s, Bytes(500, 0xab));

  auto e = n.onInterest(i, 1, 0s);
  REQUIRE(e.size() == 2);
  CHECK(std::holds_alternative<DeliverToApp>(e[0]));
  CHECK(std::get<SendInterest>(e[1]).face == 2);
  CHECK(n.pit().size() == 0);

  auto again = n.onInterest(i, 2, 1ms);
  REQUIRE(again.size() == 1);
  CHECK((std::get<Drop>(again[0]).reason == DropReason::DuplicateNonce));
}

TEST_CASE("piggyback from the local application is not looped back")
{
  Forwarder n("N", true);
  n.fib().insert(Name::fromUri("/xrpl/piggyback"), {1, 2}, Strategy::Multicast);
  auto e = n.onInterest(Interest(Name::fromUri("/xrpl/piggyback"), 5, 4s, Bytes{1}), LOCAL_FACE, 0s);
  CHECK(effectsOf<DeliverToApp>(e).empty());
  CHECK(effectsOf<SendInterest>(e).size() == 2);
}

TEST_CASE("local producer receives interests and answers through the PIT")
{
  Forwarder p("P", true);
  p.addLocalProducer(Name::fromUri("/xrpl/P"));
  Name name = Name::fromUri("/xrpl/P/val/1");

  auto e = p.onInterest(Interest(name, 1), 4, 0s);
  REQUIRE(e.size() == 1);
  CHECK(std::holds_alternative<DeliverToApp>(e[0]));

  auto reply = effectsOf<SendData>(p.onData(makeData(name), LOCAL_FACE, 1ms));
  REQUIRE(reply.size() == 1);
  CHECK(reply[0].face == 4);
}

TEST_CASE("multicast announce reaches the local app and continues")
{
  Forwarder n("N", true);
  n.fib().insert(Name::fromUri("/xrpl/announce"), {1, 2, 3}, Strategy::Multicast);
  auto e = n.onInterest(Interest(Name::fromUri("/xrpl/announce/A/7"), 1), 1, 0s);
  CHECK(effectsOf<DeliverToApp>(e).size() == 1);
  auto sent = effectsOf<SendInterest>(e);
  REQUIRE(sent.size() == 2);
  CHECK(sent[0].face == 2);
  CHECK(sent[1].face == 3);
}

TEST_CASE("data for the local application")
{
  Forwarder n("N", true);
  n.fib().insert(Name::fromUri("/xrpl/P"), {1}, Strategy::Unicast);
  Name name = Name::fromUri("/xrpl/P/val/3");
  n.onInterest(Interest(name, 1), LOCAL_FACE, 0s);
  auto e = n.onData(makeData(name), 1, 1ms);
  CHECK(effectsOf<DeliverToApp>(e).size() == 1);

  // a second local request is answered from the CS
  auto again = n.onInterest(Interest(name, 2), LOCAL_FACE, 2ms);
  REQUIRE(again.size() == 1);
  CHECK(std::holds_alternative<DeliverToApp>(again[0]));
}

TEST_CASE("local producer overlapping a local-face route is rejected")
{
  Forwarder n("N", true);
  n.fib().insert(Name::fromUri("/xrpl/N"), {LOCAL_FACE}, Strategy::Unicast);
  CHECK_THROWS_AS(n.addLocalProducer(Name::fromUri("/xrpl/N")), std::invalid_argument);
}

} // TEST_SUITE
