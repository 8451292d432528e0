#ifndef XRPNDN_CLI_COMMANDS_HPP
#define XRPNDN_CLI_COMMANDS_HPP

#include "xrpndn/common.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xrpndn::cli {

enum ExitCode : int {
  EXIT_OK = 0,
  EXIT_USAGE = 1,
  EXIT_DATA = 2,
};

struct RunOptions
{
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> outDir;
};

/// Runs one experiment and writes its event log, series files and summary.
int
cmdRun(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct AnalyzeOptions
{
  std::filesystem::path trace;
  std::size_t window = 20;
  std::filesystem::path outDir = ".";
  /// label used in output file names
  std::string observer = "trace";
  double binWidth = 0.05;
};

/// Runs the inter-arrival pipeline on an external arrival trace.
int
cmdAnalyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

struct CompareOptions
{
  std::vector<std::filesystem::path> reports;
  std::filesystem::path outDir = ".";
};

/// Merges summary.json files into one table and one overlaid histogram.
int
cmdCompare(const CompareOptions& opts, std::ostream& out, std::ostream& err);

struct Trace
{
  /// producer -> sorted, duplicate-free arrival times
  std::map<std::string, std::vector<TimePoint>> series;
  std::size_t rows = 0;
  std::size_t malformed = 0;
  std::size_t duplicates = 0;
};

/**
 * Reads a "producer_id,arrival_time_s" trace. Malformed rows are skipped with a
 * warning on \p err; a missing header throws std::runtime_error.
 */
Trace
parseTrace(std::istream& is, std::ostream& err);

void
writeTrace(std::ostream& os, const std::map<std::string, std::vector<TimePoint>>& series);

/// Writes deltas_, band_ and hist_ CSVs of one (observer, producer) series.
void
writeSeriesFiles(const std::filesystem::path& dir, const std::string& observer,
                 const std::string& producer, const std::vector<TimePoint>& arrivals,
                 std::size_t window, double binWidth);

} // namespace xrpndn::cli

#endif // XRPNDN_CLI_COMMANDS_HPP
