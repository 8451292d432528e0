#include "xrpndn/sim/event-log.hpp"

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace xrpndn::sim {

namespace {

constexpr std::array<std::pair<RecordKind, std::string_view>, 11> KIND_NAMES{{
  {RecordKind::Interest, "Interest"},
  {RecordKind::Data, "Data"},
  {RecordKind::Validation, "Validation"},
  {RecordKind::LedgerClose, "ledger-close"},
  {RecordKind::ValidationOut, "val-out"},
  {RecordKind::ValidationInFirst, "val-in-first"},
  {RecordKind::ValidationInDuplicate, "val-in-dup"},
  {RecordKind::ValidationInUntrusted, "val-in-untrusted"},
  {RecordKind::CsHits, "cs-hits"},
  {RecordKind::CsMisses, "cs-misses"},
  {RecordKind::CsEntries, "cs-entries"},
}};

template<typename T>
T
parseNumber(std::string_view text, std::string_view what)
{
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw EventLogError(fmt::format("bad {} '{}'", what, text));
  }
  return value;
}

} // namespace

std::string_view
toString(RecordKind kind)
{
  for (const auto& [k, name] : KIND_NAMES) {
    if (k == kind) {
      return name;
    }
  }
  return "unknown";
}

RecordKind
parseRecordKind(std::string_view text)
{
  for (const auto& [k, name] : KIND_NAMES) {
    if (name == text) {
      return k;
    }
  }
  throw EventLogError(fmt::format("unknown record kind '{}'", text));
}

bool
isPacket(RecordKind kind) noexcept
{
  return kind == RecordKind::Interest || kind == RecordKind::Data ||
         kind == RecordKind::Validation;
}

std::pair<std::string, LedgerSeq>
EventRecord::producerAndSeq() const
{
  auto slash = name.rfind('/');
  if (slash == std::string::npos || slash == 0) {
    throw EventLogError(fmt::format("record name '{}' is not <producer>/<seq>", name));
  }
  return {name.substr(0, slash),
          parseNumber<LedgerSeq>(std::string_view(name).substr(slash + 1), "seq")};
}

TimePoint
parseSeconds(std::string_view text)
{
  if (!text.empty() && text.front() == '-') {
    throw EventLogError(fmt::format("negative time '{}'", text));
  }
  auto dot = text.find('.');
  auto whole = parseNumber<std::int64_t>(text.substr(0, dot), "time");
  std::int64_t frac = 0;
  if (dot != std::string_view::npos) {
    auto digits = text.substr(dot + 1);
    if (digits.empty()) {
      throw EventLogError(fmt::format("bad time '{}'", text));
    }
    bool roundUp = digits.size() > 9 && digits[9] >= '5';
    digits = digits.substr(0, 9);
    frac = parseNumber<std::int64_t>(digits, "time");
    for (auto i = digits.size(); i < 9; ++i) {
      frac *= 10;
    }
    if (roundUp) {
      ++frac;
    }
  }
  return TimePoint(whole * 1'000'000'000 + frac);
}

std::string
formatSeconds(TimePoint t)
{
  auto ns = t.count();
  return fmt::format("{}.{:09}", ns / 1'000'000'000, ns % 1'000'000'000);
}

void
EventLog::writeCsv(std::ostream& os) const
{
  os << CSV_HEADER << '\n';
  for (const auto& r : m_records) {
    os << formatSeconds(r.time) << ',' << toString(r.kind) << ','
       << (r.link ? std::to_string(*r.link) : "-") << ',' << r.from << ','
       << (r.to.empty() ? "-" : r.to) << ',' << (r.name.empty() ? "-" : r.name) << ','
       << r.size << '\n';
  }
}

EventLog
EventLog::readCsv(std::istream& is)
{
  std::string line;
  if (!std::getline(is, line) || line != CSV_HEADER) {
    throw EventLogError("event log header missing or unexpected");
  }
  EventLog log;
  std::size_t lineNo = 1;
  while (std::getline(is, line)) {
    ++lineNo;
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 7) {
      throw EventLogError(fmt::format("line {}: expected 7 fields, got {}", lineNo, fields.size()));
    }
    try {
      EventRecord r;
      r.time = parseSeconds(fields[0]);
      r.kind = parseRecordKind(fields[1]);
      if (fields[2] != "-") {
        r.link = parseNumber<std::size_t>(fields[2], "link");
      }
      r.from = fields[3];
      r.to = fields[4] == "-" ? "" : fields[4];
      r.name = fields[5] == "-" ? "" : fields[5];
      r.size = parseNumber<std::uint64_t>(fields[6], "size");
      log.append(std::move(r));
    }
    catch (const EventLogError& e) {
      throw EventLogError(fmt::format("line {}: {}", lineNo, e.what()));
    }
  }
  return log;
}

} // namespace xrpndn::sim
