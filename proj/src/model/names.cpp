#include "xrpndn/model/names.hpp"

#include <charconv>
#include <stdexcept>

namespace xrpndn::model {

namespace {

const std::string ROOT = "xrpl";
const std::string ANNOUNCE = "announce";
const std::string PIGGYBACK = "piggyback";
const std::string LATEST = "latest";
const std::string VAL = "val";

std::string
checkedProducer(std::string_view producer)
{
  if (producer.empty()) {
    throw std::invalid_argument("name scheme needs a producer id");
  }
  // reserved words would make the scheme ambiguous
  if (producer == ANNOUNCE || producer == PIGGYBACK) {
    throw std::invalid_argument("producer id '" + std::string(producer) + "' is reserved");
  }
  return std::string(producer);
}

LedgerSeq
checkedSeq(std::optional<LedgerSeq> seq)
{
  if (!seq) {
    throw std::invalid_argument("name scheme needs a sequence number");
  }
  return *seq;
}

std::optional<LedgerSeq>
parseSeq(const std::string& text)
{
  LedgerSeq value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

} // namespace

std::string_view
toString(ModelKind kind)
{
  switch (kind) {
    case ModelKind::Baseline:
      return "baseline";
    case ModelKind::Polling:
      return "polling";
    case ModelKind::AnnouncePull:
      return "announce-pull";
    case ModelKind::AdvanceRequest:
      return "advance-request";
    case ModelKind::Piggyback:
      return "piggyback";
  }
  return "unknown";
}

ModelKind
parseModelKind(std::string_view text)
{
  for (auto kind : {ModelKind::Baseline, ModelKind::Polling, ModelKind::AnnouncePull,
                    ModelKind::AdvanceRequest, ModelKind::Piggyback}) {
    if (toString(kind) == text) {
      return kind;
    }
  }
  throw std::invalid_argument("unknown model '" + std::string(text) + "'");
}

ndn::Name
makeName(NameKind kind, std::string_view producer, std::optional<LedgerSeq> seq)
{
  switch (kind) {
    case NameKind::LatestSeq:
      return ndn::Name{ROOT, checkedProducer(producer), LATEST};
    case NameKind::Validation:
      return ndn::Name{ROOT, checkedProducer(producer), VAL, std::to_string(checkedSeq(seq))};
    case NameKind::Announce:
      return ndn::Name{ROOT, ANNOUNCE, checkedProducer(producer), std::to_string(checkedSeq(seq))};
    case NameKind::Piggyback:
      return ndn::Name{ROOT, PIGGYBACK};
  }
  throw std::invalid_argument("unknown name kind");
}

ndn::Name
producerPrefix(std::string_view producer)
{
  return ndn::Name{ROOT, checkedProducer(producer)};
}

ndn::Name
announcePrefix()
{
  return ndn::Name{ROOT, ANNOUNCE};
}

std::optional<ParsedName>
parseName(const ndn::Name& name)
{
  const auto& c = name.components();
  if (c.empty() || c[0] != ROOT) {
    return std::nullopt;
  }
  if (c.size() == 2 && c[1] == PIGGYBACK) {
    return ParsedName{NameKind::Piggyback, {}, std::nullopt};
  }
  if (c.size() == 4 && c[1] == ANNOUNCE) {
    if (auto seq = parseSeq(c[3])) {
      return ParsedName{NameKind::Announce, c[2], seq};
    }
    return std::nullopt;
  }
  if (c.size() == 3 && c[2] == LATEST && c[1] != ANNOUNCE && c[1] != PIGGYBACK) {
    return ParsedName{NameKind::LatestSeq, c[1], std::nullopt};
  }
  if (c.size() == 4 && c[2] == VAL && c[1] != PIGGYBACK) {
    if (auto seq = parseSeq(c[3])) {
      return ParsedName{NameKind::Validation, c[1], seq};
    }
  }
  return std::nullopt;
}

} // namespace xrpndn::model
