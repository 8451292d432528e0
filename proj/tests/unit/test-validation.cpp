#include "xrpndn/xrpl/validation.hpp"

#include <doctest.h>

#include <random>

using namespace xrpndn;
using namespace xrpndn::xrpl;
using namespace std::chrono_literals;

TEST_SUITE("Validation") {

TEST_CASE("round trip at the default size")
{
  Validation v{"A", 7, ledgerHashFor(7), 21s, DEFAULT_VALIDATION_SIZE};
  auto bytes = encode(v);
  CHECK(bytes.size() == 500);
  CHECK(decode(bytes) == v);
}

TEST_CASE("round trip over random fields")
{
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::string id(1 + rng() % 40, static_cast<char>('a' + rng() % 26));
    auto size = static_cast<std::uint32_t>(encodedHeaderSize(id) + rng() % 600);
    Validation v{id, rng(), ledgerHashFor(rng()), Duration(static_cast<Duration::rep>(rng() >> 2)), size};
    auto bytes = encode(v);
    REQUIRE(bytes.size() == size);
    CHECK(decode(bytes) == v);
  }
}

TEST_CASE("header must fit the payload")
{
  Validation v{"A", 1, ledgerHashFor(1), 0s, static_cast<std::uint32_t>(encodedHeaderSize("A") - 1)};
  CHECK_THROWS_AS(encode(v), std::invalid_argument);
  v.payloadSize = static_cast<std::uint32_t>(encodedHeaderSize("A"));
  CHECK(decode(encode(v)) == v);
}

TEST_CASE("invalid ids")
{
  CHECK_THROWS_AS(encode(Validation{"", 1, ledgerHashFor(1), 0s, 500}), std::invalid_argument);
  CHECK_THROWS_AS(encode(Validation{std::string(256, 'x'), 1, ledgerHashFor(1), 0s, 1000}),
                  std::invalid_argument);
}

TEST_CASE("truncated input fails to decode")
{
  auto bytes = encode(Validation{"A", 1, ledgerHashFor(1), 0s, 500});
  CHECK_THROWS_AS(decode(std::span<const std::uint8_t>(bytes.data(), 10)), DecodeError);
  CHECK_THROWS_AS(decode(Bytes{}), DecodeError);
}

TEST_CASE("hashes differ per sequence")
{
  CHECK(ledgerHashFor(1) == ledgerHashFor(1));
  CHECK(ledgerHashFor(1) != ledgerHashFor(2));
}

} // TEST_SUITE
