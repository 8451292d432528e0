#include "xrpndn/ndn/name.hpp"

#include <doctest.h>

#include <sstream>

using xrpndn::ndn::Name;

TEST_SUITE("Name") {

TEST_CASE("parse and print")
{
  auto n = Name::fromUri("/xrpl/A/val/7");
  CHECK(n.size() == 4);
  CHECK(n.at(1) == "A");
  CHECK(n.toUri() == "/xrpl/A/val/7");
  CHECK(n == Name({"xrpl", "A", "val", "7"}));

  std::ostringstream os;
  os << n;
  CHECK(os.str() == "/xrpl/A/val/7");
}

TEST_CASE("rejects malformed names")
{
  CHECK_THROWS_AS(Name::fromUri(""), Name::Error);
  CHECK_THROWS_AS(Name::fromUri("/"), Name::Error);
  CHECK_THROWS_AS(Name::fromUri("/a//b"), Name::Error);
  CHECK_THROWS_AS(Name(std::vector<std::string>{}), Name::Error);
  CHECK_THROWS_AS(Name({"a/b"}), Name::Error);
  CHECK_THROWS_AS(Name({"a", ""}), Name::Error);
}

TEST_CASE("prefix relation")
{
  Name a{"xrpl", "A"};
  Name b{"xrpl", "A", "val", "7"};
  CHECK(a.isPrefixOf(b));
  CHECK(b.isPrefixOf(b));
  CHECK_FALSE(b.isPrefixOf(a));
  CHECK_FALSE(Name({"xrpl", "B"}).isPrefixOf(b));
  CHECK(b.getPrefix(2) == a);

  Name c = a;
  c.append("latest");
  CHECK(c.toUri() == "/xrpl/A/latest");
}

} // TEST_SUITE
