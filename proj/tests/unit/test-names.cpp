#include "xrpndn/model/names.hpp"

#include <doctest.h>

using namespace xrpndn;
using namespace xrpndn::model;

TEST_SUITE("Names") {

TEST_CASE("construction")
{
  CHECK(makeName(NameKind::Validation, "A", 7).toUri() == "/xrpl/A/val/7");
  CHECK(makeName(NameKind::LatestSeq, "A").toUri() == "/xrpl/A/latest");
  CHECK(makeName(NameKind::Announce, "A", 7).toUri() == "/xrpl/announce/A/7");
  CHECK(makeName(NameKind::Piggyback).toUri() == "/xrpl/piggyback");
  CHECK(makeName(NameKind::Piggyback, "B", 3) == makeName(NameKind::Piggyback));
  CHECK(producerPrefix("A").toUri() == "/xrpl/A");
  CHECK(announcePrefix().toUri() == "/xrpl/announce");
}

TEST_CASE("missing parts and reserved ids")
{
  CHECK_THROWS_AS(makeName(NameKind::Validation, "A"), std::invalid_argument);
  CHECK_THROWS_AS(makeName(NameKind::LatestSeq), std::invalid_argument);
  CHECK_THROWS_AS(makeName(NameKind::LatestSeq, "announce"), std::invalid_argument);
  CHECK_THROWS_AS(makeName(NameKind::Validation, "piggyback", 1), std::invalid_argument);
}

TEST_CASE("parse inverts make")
{
  for (auto kind : {NameKind::Validation, NameKind::Announce}) {
    auto parsed = parseName(makeName(kind, "B", 42));
    REQUIRE(parsed);
    CHECK(parsed->kind == kind);
    CHECK(parsed->producer == "B");
    CHECK(parsed->seq == 42u);
  }
  auto latest = parseName(makeName(NameKind::LatestSeq, "C"));
  REQUIRE(latest);
  CHECK(latest->kind == NameKind::LatestSeq);
  CHECK_FALSE(latest->seq);
  CHECK(parseName(makeName(NameKind::Piggyback))->kind == NameKind::Piggyback);

  CHECK_FALSE(parseName(ndn::Name::fromUri("/other/A/val/1")));
  CHECK_FALSE(parseName(ndn::Name::fromUri("/xrpl/A/val/x")));
  CHECK_FALSE(parseName(ndn::Name::fromUri("/xrpl/A/unknown")));
}

TEST_CASE("model names")
{
  for (auto kind : {ModelKind::Baseline, ModelKind::Polling, ModelKind::AnnouncePull,
                    ModelKind::AdvanceRequest, ModelKind::Piggyback}) {
    CHECK((parseModelKind(toString(kind)) == kind));
  }
  CHECK_THROWS_AS(parseModelKind("gossip"), std::invalid_argument);
}

} // TEST_SUITE
