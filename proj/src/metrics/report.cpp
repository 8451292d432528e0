#include "xrpndn/metrics/report.hpp"

#include <fmt/format.h>

#include <ostream>

namespace xrpndn::metrics {

using sim::RecordKind;

ArrivalSeries
arrivalSeries(const sim::EventLog& log)
{
  ArrivalSeries out;
  for (const auto& r : log.records()) {
    if (r.kind == RecordKind::ValidationInFirst) {
      out[r.from][r.producerAndSeq().first].push_back(r.time);
    }
  }
  return out;
}

std::map<std::string, xrpl::ValidatorCounters>
nodeCounters(const sim::EventLog& log)
{
  std::map<std::string, xrpl::ValidatorCounters> out;
  for (const auto& r : log.records()) {
    switch (r.kind) {
      case RecordKind::LedgerClose:
        ++out[r.from].ledgersCreated;
        break;
      case RecordKind::ValidationOut:
        out[r.from].validationsOut += r.size;
        break;
      case RecordKind::ValidationInFirst:
      case RecordKind::ValidationInDuplicate:
      case RecordKind::ValidationInUntrusted:
        out[r.from].validationsIn += r.size;
        break;
      default:
        break;
    }
  }
  return out;
}

double
valsPerLedger(const xrpl::ValidatorCounters& counters)
{
  if (counters.ledgersCreated == 0) {
    throw std::invalid_argument("validations per ledger needs at least one ledger");
  }
  return static_cast<double>(counters.validationsIn + counters.validationsOut) /
         static_cast<double>(counters.ledgersCreated);
}

NicCounters
nicCounters(const sim::EventLog& log, const std::string& node, TimePoint begin, Duration window)
{
  NicCounters out;
  TimePoint end = begin + window;
  for (const auto& r : log.records()) {
    if (sim::isPacket(r.kind) && r.time >= begin && r.time < end &&
        (r.from == node || r.to == node)) {
      out.bytes += r.size;
      ++out.packets;
    }
  }
  if (window > Duration::zero()) {
    out.avgBitrateKbps = 8.0 * static_cast<double>(out.bytes) / toSeconds(window) / 1000.0;
  }
  return out;
}

CsRates
csRates(const ndn::CsStats& stats, std::uint64_t entries, Duration duration)
{
  if (duration <= Duration::zero()) {
    throw std::invalid_argument("Content Store rates need a positive duration");
  }
  double minutes = toSeconds(duration) / 60.0;
  return {static_cast<double>(stats.misses) / minutes, static_cast<double>(stats.hits) / minutes,
          entries};
}

MetricsReport
summarize(const sim::EventLog& log, const SummaryInputs& in)
{
  in.options.validate();
  MetricsReport r;
  r.model = in.model;
  r.topology = in.topology;
  r.durationS = toSeconds(in.duration);
  r.observer = in.observer;

  std::vector<double> pooled;
  auto series = arrivalSeries(log);
  if (auto it = series.find(in.observer); it != series.end()) {
    for (const auto& [producer, arrivals] : it->second) {
      auto deltas = interarrivalDeltas(arrivals);
      pooled.insert(pooled.end(), deltas.begin(), deltas.end());
    }
  }
  r.deltaCount = pooled.size();
  if (!pooled.empty()) {
    auto q = quantiles(pooled);
    r.q25 = q[0];
    r.q50 = q[1];
    r.q75 = q[2];
    r.meanDelta = mean(pooled);
  }
  r.histogram = histogram(pooled, in.options.histogramBinWidth);

  double sum = 0.0;
  for (const auto& [node, counters] : nodeCounters(log)) {
    if (counters.ledgersCreated > 0) {
      r.valsPerLedgerByNode[node] = valsPerLedger(counters);
      sum += r.valsPerLedgerByNode[node];
    }
  }
  if (!r.valsPerLedgerByNode.empty()) {
    r.valsPerLedger = sum / static_cast<double>(r.valsPerLedgerByNode.size());
  }

  r.nicNode = in.nicNode;
  r.bitrateWindowS = toSeconds(in.options.bitrateWindow);
  r.packetWindowS = toSeconds(in.options.packetWindow);
  if (in.options.bitrateWindow <= in.duration) {
    r.avgBitrateKbps = nicCounters(log, in.nicNode, TimePoint::zero(), in.options.bitrateWindow)
                         .avgBitrateKbps;
  }
  if (in.options.packetWindow <= in.duration) {
    r.packets = nicCounters(log, in.nicNode, TimePoint::zero(), in.options.packetWindow).packets;
  }

  bool anyCs = false;
  ndn::CsStats cs;
  std::uint64_t entries = 0;
  for (const auto& rec : log.records()) {
    switch (rec.kind) {
      case RecordKind::CsHits:
        cs.hits += rec.size;
        anyCs = true;
        break;
      case RecordKind::CsMisses:
        cs.misses += rec.size;
        break;
      case RecordKind::CsEntries:
        entries += rec.size;
        break;
      default:
        break;
    }
  }
  if (anyCs) {
    r.contentStore = csRates(cs, entries, in.duration);
  }
  return r;
}

namespace {

template<typename T>
nlohmann::ordered_json
orNull(const std::optional<T>& v)
{
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template<typename T>
std::optional<T>
optionalField(const nlohmann::json& j, const char* key)
{
  if (!j.contains(key)) {
    throw std::invalid_argument(fmt::format("summary: missing field '{}'", key));
  }
  if (j.at(key).is_null()) {
    return std::nullopt;
  }
  return j.at(key).get<T>();
}

std::string
fixed(const std::optional<double>& v, int digits)
{
  return v ? fmt::format("{:.{}f}", *v, digits) : "n/c";
}

} // namespace

nlohmann::ordered_json
MetricsReport::toJson() const
{
  nlohmann::ordered_json j;
  j["schema"] = SCHEMA;
  j["model"] = model;
  j["topology"] = topology;
  j["duration_s"] = durationS;
  j["observer"] = observer;
  j["interarrival"] = {{"count", deltaCount}, {"q25", orNull(q25)}, {"q50", orNull(q50)},
                       {"q75", orNull(q75)}, {"mean", orNull(meanDelta)}};
  j["vals_per_ledger"] = orNull(valsPerLedger);
  j["vals_per_ledger_by_node"] = valsPerLedgerByNode;
  j["nic"] = {{"node", nicNode},
              {"bitrate_window_s", bitrateWindowS},
              {"avg_bitrate_kbit_s", orNull(avgBitrateKbps)},
              {"packet_window_s", packetWindowS},
              {"packets", orNull(packets)}};
  if (contentStore) {
    j["content_store"] = {{"misses_per_min", contentStore->missesPerMin},
                          {"hits_per_min", contentStore->hitsPerMin},
                          {"entries", contentStore->entries}};
  }
  else {
    j["content_store"] = nullptr;
  }
  j["histogram"] = {{"bin_width_s", histogram.binWidth},
                    {"first_bin", histogram.firstBin},
                    {"counts", histogram.counts}};
  return j;
}

MetricsReport
MetricsReport::fromJson(const nlohmann::json& j)
{
  try {
    if (j.value("schema", "") != SCHEMA) {
      throw std::invalid_argument(fmt::format("summary: expected schema '{}'", SCHEMA));
    }
    MetricsReport r;
    r.model = j.at("model").get<std::string>();
    r.topology = j.at("topology").get<std::string>();
    r.durationS = j.at("duration_s").get<double>();
    r.observer = j.at("observer").get<std::string>();

    const auto& ia = j.at("interarrival");
    r.deltaCount = ia.at("count").get<std::size_t>();
    r.q25 = optionalField<double>(ia, "q25");
    r.q50 = optionalField<double>(ia, "q50");
    r.q75 = optionalField<double>(ia, "q75");
    r.meanDelta = optionalField<double>(ia, "mean");

    r.valsPerLedger = optionalField<double>(j, "vals_per_ledger");
    r.valsPerLedgerByNode = j.at("vals_per_ledger_by_node").get<std::map<std::string, double>>();

    const auto& nic = j.at("nic");
    r.nicNode = nic.at("node").get<std::string>();
    r.bitrateWindowS = nic.at("bitrate_window_s").get<double>();
    r.avgBitrateKbps = optionalField<double>(nic, "avg_bitrate_kbit_s");
    r.packetWindowS = nic.at("packet_window_s").get<double>();
    r.packets = optionalField<std::uint64_t>(nic, "packets");

    if (!j.at("content_store").is_null()) {
      const auto& cs = j.at("content_store");
      r.contentStore = CsRates{cs.at("misses_per_min").get<double>(),
                               cs.at("hits_per_min").get<double>(),
                               cs.at("entries").get<std::uint64_t>()};
    }

    const auto& h = j.at("histogram");
    r.histogram.binWidth = h.at("bin_width_s").get<double>();
    r.histogram.firstBin = h.at("first_bin").get<long long>();
    r.histogram.counts = h.at("counts").get<std::vector<std::uint64_t>>();
    return r;
  }
  catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(fmt::format("summary: {}", e.what()));
  }
}

void
writeTable(std::ostream& os, const std::vector<MetricsReport>& rows)
{
  std::vector<std::vector<std::string>> cells{
    {"model", "topology", "q(0.25)", "q(0.5)", "q(0.75)", "vals/ledger", "kbit/s", "packets",
     "CS miss/min", "CS hit/min", "CS entries"}};
  for (const auto& r : rows) {
    std::vector<std::string> row{r.model, r.topology, fixed(r.q25, 2), fixed(r.q50, 2),
                                 fixed(r.q75, 2), fixed(r.valsPerLedger, 2),
                                 fixed(r.avgBitrateKbps, 1),
                                 r.packets ? std::to_string(*r.packets) : "n/c"};
    if (r.contentStore) {
      row.push_back(fmt::format("{:.1f}", r.contentStore->missesPerMin));
      row.push_back(fmt::format("{:.1f}", r.contentStore->hitsPerMin));
      row.push_back(std::to_string(r.contentStore->entries));
    }
    else {
      row.insert(row.end(), {"N/A", "N/A", "N/A"});
    }
    cells.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i < 2 ? fmt::format("{:<{}}", row[i], widths[i]) : fmt::format("{:>{}}", row[i], widths[i]);
      if (i + 1 < row.size()) {
        line += "  ";
      }
    }
    os << line << '\n';
  }
}

} // namespace xrpndn::metrics
