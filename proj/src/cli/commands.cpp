#include "xrpndn/cli/commands.hpp"
#include "xrpndn/cli/config.hpp"
#include "xrpndn/metrics/report.hpp"
#include "xrpndn/sim/experiment.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace xrpndn::cli {

namespace fs = std::filesystem;

namespace {

class DataError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::ofstream
openOutput(const fs::path& path)
{
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw DataError(fmt::format("cannot write {}", path.string()));
  }
  return os;
}

void
ensureDir(const fs::path& dir)
{
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw DataError(fmt::format("cannot create {}: {}", dir.string(), ec.message()));
  }
}

std::string
seconds(double s)
{
  return fmt::format("{:.9f}", s);
}

std::string
trim(std::string_view s)
{
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

} // namespace

Trace
parseTrace(std::istream& is, std::ostream& err)
{
  std::string line;
  if (!std::getline(is, line) || trim(line) != "producer_id,arrival_time_s") {
    throw std::runtime_error("trace header must be 'producer_id,arrival_time_s'");
  }

  Trace trace;
  std::size_t lineNo = 1;
  while (std::getline(is, line)) {
    ++lineNo;
    if (trim(line).empty()) {
      continue;
    }
    ++trace.rows;
    auto comma = line.find(',');
    std::string producer = trim(line.substr(0, comma));
    std::optional<TimePoint> at;
    if (comma != std::string::npos && !producer.empty() &&
        line.find(',', comma + 1) == std::string::npos) {
      try {
        at = sim::parseSeconds(trim(line.substr(comma + 1)));
      }
      catch (const sim::EventLogError&) {
      }
    }
    if (!at) {
      ++trace.malformed;
      fmt::print(err, "warning: trace line {} skipped (malformed): {}\n", lineNo, line);
      continue;
    }
    trace.series[producer].push_back(*at);
  }

  for (auto& [producer, times] : trace.series) {
    std::sort(times.begin(), times.end());
    auto last = std::unique(times.begin(), times.end());
    trace.duplicates += static_cast<std::size_t>(times.end() - last);
    times.erase(last, times.end());
  }
  return trace;
}

void
writeTrace(std::ostream& os, const std::map<std::string, std::vector<TimePoint>>& series)
{
  os << "producer_id,arrival_time_s\n";
  for (const auto& [producer, times] : series) {
    for (auto t : times) {
      os << producer << ',' << sim::formatSeconds(t) << '\n';
    }
  }
}

void
writeSeriesFiles(const fs::path& dir, const std::string& observer, const std::string& producer,
                 const std::vector<TimePoint>& arrivals, std::size_t window, double binWidth)
{
  auto stem = fmt::format("{}_{}.csv", observer, producer);
  auto deltas = metrics::interarrivalDeltas(arrivals);

  auto d = openOutput(dir / ("deltas_" + stem));
  d << "index,producer,delta_s\n";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    d << i << ',' << producer << ',' << seconds(deltas[i]) << '\n';
  }

  auto band = metrics::rollingBand(deltas, window);
  auto b = openOutput(dir / ("band_" + stem));
  b << "index,center,upper,lower\n";
  for (std::size_t i = 0; i < band.size(); ++i) {
    b << i + window - 1 << ',' << seconds(band.center[i]) << ',' << seconds(band.upper[i]) << ','
      << seconds(band.lower[i]) << '\n';
  }

  auto hist = metrics::histogram(deltas, binWidth);
  auto h = openOutput(dir / ("hist_" + stem));
  h << "bin_start_s,bin_end_s,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    h << seconds(hist.binStart(i)) << ',' << seconds(hist.binStart(i + 1)) << ','
      << hist.counts[i] << '\n';
  }
}

int
cmdRun(const RunOptions& opts, std::ostream& out, std::ostream& err)
{
  ExperimentConfig cfg;
  try {
    cfg = loadConfig(opts.config);
    if (opts.seed) {
      cfg.run.seed = *opts.seed;
    }
  }
  catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return EXIT_DATA;
  }
  fs::path dir = opts.outDir.value_or(cfg.outputDir.value_or("xrpndn-out"));

  try {
    ensureDir(dir);
    auto [result, report] = sim::run(cfg.run);
    const auto& options = cfg.run.metrics;

    {
      auto os = openOutput(dir / "events.csv");
      result.log.writeCsv(os);
    }
    for (const auto& [observer, series] : metrics::arrivalSeries(result.log)) {
      auto os = openOutput(dir / fmt::format("trace_{}.csv", observer));
      writeTrace(os, series);
      for (const auto& [producer, arrivals] : series) {
        writeSeriesFiles(dir, observer, producer, arrivals, options.rollingWindow,
                         options.histogramBinWidth);
      }
    }

    std::ostringstream table;
    metrics::writeTable(table, {report});
    table << '\n'
          << fmt::format("duration_s: {}\nseed: {}\nobserver: {} ({} deltas", report.durationS,
                         cfg.run.seed, report.observer, report.deltaCount);
    if (report.meanDelta) {
      table << fmt::format(", mean {:.3f} s", *report.meanDelta);
    }
    table << ")\n" << fmt::format("nic node: {}\n", report.nicNode);
    for (const auto& [node, ratio] : report.valsPerLedgerByNode) {
      table << fmt::format("vals/ledger {}: {:.3f}\n", node, ratio);
    }
    {
      auto os = openOutput(dir / "summary.txt");
      os << table.str();
      auto js = openOutput(dir / "summary.json");
      js << report.toJson().dump(2) << '\n';
    }
    out << table.str() << fmt::format("outputs written to {}\n", dir.string());
    return EXIT_OK;
  }
  catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return EXIT_DATA;
  }
}

int
cmdAnalyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err)
{
  if (opts.window < 2) {
    fmt::print(err, "error: --window must be at least 2\n");
    return EXIT_USAGE;
  }
  if (!(opts.binWidth > 0)) {
    fmt::print(err, "error: --bin-width must be positive\n");
    return EXIT_USAGE;
  }
  try {
    std::ifstream is(opts.trace);
    if (!is) {
      throw DataError(fmt::format("cannot read {}", opts.trace.string()));
    }
    auto trace = parseTrace(is, err);
    if (trace.series.empty()) {
      throw DataError(fmt::format("trace {} has no usable records", opts.trace.string()));
    }
    ensureDir(opts.outDir);

    nlohmann::ordered_json producers = nlohmann::ordered_json::object();
    std::vector<double> pooled;
    out << fmt::format("{:<16} {:>7} {:>9} {:>9} {:>9} {:>9}\n", "producer", "deltas", "mean",
                       "q(0.25)", "q(0.5)", "q(0.75)");
    for (const auto& [producer, arrivals] : trace.series) {
      writeSeriesFiles(opts.outDir, opts.observer, producer, arrivals, opts.window, opts.binWidth);
      auto deltas = metrics::interarrivalDeltas(arrivals);
      pooled.insert(pooled.end(), deltas.begin(), deltas.end());
      nlohmann::ordered_json entry{{"arrivals", arrivals.size()}, {"deltas", deltas.size()}};
      if (deltas.empty()) {
        out << fmt::format("{:<16} {:>7} {:>9} {:>9} {:>9} {:>9}\n", producer, 0, "n/c", "n/c",
                           "n/c", "n/c");
      }
      else {
        auto q = metrics::quantiles(deltas);
        double m = metrics::mean(deltas);
        entry.update({{"mean", m}, {"q25", q[0]}, {"q50", q[1]}, {"q75", q[2]},
                      {"band_points", metrics::rollingBand(deltas, opts.window).size()}});
        out << fmt::format("{:<16} {:>7} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f}\n", producer,
                           deltas.size(), m, q[0], q[1], q[2]);
      }
      producers[producer] = entry;
    }

    nlohmann::ordered_json summary{{"observer", opts.observer},
                                   {"window", opts.window},
                                   {"rows", trace.rows},
                                   {"malformed_rows", trace.malformed},
                                   {"duplicate_rows", trace.duplicates},
                                   {"producers", producers}};
    if (!pooled.empty()) {
      auto q = metrics::quantiles(pooled);
      summary["pooled"] = {{"deltas", pooled.size()}, {"mean", metrics::mean(pooled)},
                           {"q25", q[0]}, {"q50", q[1]}, {"q75", q[2]}};
    }
    auto js = openOutput(opts.outDir / fmt::format("analysis_{}.json", opts.observer));
    js << summary.dump(2) << '\n';
    out << fmt::format("{} rows, {} malformed skipped, {} duplicates dropped\n", trace.rows,
                       trace.malformed, trace.duplicates);
    return EXIT_OK;
  }
  catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return EXIT_DATA;
  }
}

int
cmdCompare(const CompareOptions& opts, std::ostream& out, std::ostream& err)
{
  if (opts.reports.size() < 2) {
    fmt::print(err, "error: compare needs at least two summary files\n");
    return EXIT_USAGE;
  }
  try {
    std::vector<metrics::MetricsReport> reports;
    for (const auto& path : opts.reports) {
      std::ifstream is(path);
      if (!is) {
        throw DataError(fmt::format("cannot read {}", path.string()));
      }
      try {
        reports.push_back(metrics::MetricsReport::fromJson(nlohmann::json::parse(is)));
      }
      catch (const std::exception& e) {
        throw DataError(fmt::format("{}: {}", path.string(), e.what()));
      }
    }
    double binWidth = reports.front().histogram.binWidth;
    for (std::size_t i = 1; i < reports.size(); ++i) {
      if (std::abs(reports[i].histogram.binWidth - binWidth) > 1e-12) {
        throw DataError(fmt::format("incompatible histograms: bin width {} in {} vs {} in {}",
                                    reports[i].histogram.binWidth, opts.reports[i].string(),
                                    binWidth, opts.reports[0].string()));
      }
    }

    // one unique label per report, shared by the ratio lines and the histogram columns
    std::vector<std::string> columns;
    std::set<std::string> used;
    for (const auto& r : reports) {
      auto name = fmt::format("{}_{}", r.model, r.topology);
      for (int k = 2; !used.insert(name).second; ++k) {
        name = fmt::format("{}_{}_{}", r.model, r.topology, k);
      }
      columns.push_back(name);
    }

    std::ostringstream text;
    metrics::writeTable(text, reports);
    const auto& first = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
      if (first.valsPerLedger && reports[i].valsPerLedger && *reports[i].valsPerLedger > 0) {
        text << fmt::format("vals/ledger ratio {} / {}: {:.2f}\n", columns[0], columns[i],
                            *first.valsPerLedger / *reports[i].valsPerLedger);
      }
    }
    ensureDir(opts.outDir);
    {
      auto os = openOutput(opts.outDir / "compare.txt");
      os << text.str();
    }

    long long lo = 0;
    long long hi = -1;
    for (const auto& r : reports) {
      if (!r.histogram.counts.empty()) {
        long long last = r.histogram.firstBin + static_cast<long long>(r.histogram.counts.size()) - 1;
        if (hi < lo) {
          lo = r.histogram.firstBin;
          hi = last;
        }
        else {
          lo = std::min(lo, r.histogram.firstBin);
          hi = std::max(hi, last);
        }
      }
    }
    auto os = openOutput(opts.outDir / "compare_hist.csv");
    os << "bin_start_s,bin_end_s";
    for (const auto& c : columns) {
      os << ',' << c;
    }
    os << '\n';
    for (long long bin = lo; bin <= hi; ++bin) {
      os << seconds(static_cast<double>(bin) * binWidth) << ','
         << seconds(static_cast<double>(bin + 1) * binWidth);
      for (const auto& r : reports) {
        auto idx = bin - r.histogram.firstBin;
        std::uint64_t count = 0;
        if (idx >= 0 && idx < static_cast<long long>(r.histogram.counts.size())) {
          count = r.histogram.counts[static_cast<std::size_t>(idx)];
        }
        os << ',' << count;
      }
      os << '\n';
    }
    out << text.str();
    return EXIT_OK;
  }
  catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return EXIT_DATA;
  }
}

} // namespace xrpndn::cli
