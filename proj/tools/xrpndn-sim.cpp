#include "xrpndn/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace xrpndn::cli;

int
main(int argc, char** argv)
{
  CLI::App app{"Simulator of XRPL validation dissemination over NDN", "xrpndn-sim"};
  app.require_subcommand(1);

  RunOptions runOpts;
  std::string outDir;
  auto* run = app.add_subcommand("run", "run one experiment from a JSON config");
  run->add_option("--config", runOpts.config, "experiment configuration")->required();
  run->add_option("--seed", runOpts.seed, "override the configured seed");
  run->add_option("--out-dir", outDir, "output directory (overrides output_dir)");

  AnalyzeOptions analyzeOpts;
  auto* analyze = app.add_subcommand("analyze", "inter-arrival analysis of an arrival trace");
  analyze->add_option("trace", analyzeOpts.trace, "CSV with header producer_id,arrival_time_s")
    ->required();
  analyze->add_option("--window", analyzeOpts.window, "rolling window in deltas")
    ->capture_default_str();
  analyze->add_option("--out-dir", analyzeOpts.outDir, "output directory")->capture_default_str();
  analyze->add_option("--observer", analyzeOpts.observer, "label used in output file names")
    ->capture_default_str();
  analyze->add_option("--bin-width", analyzeOpts.binWidth, "histogram bin width, seconds")
    ->capture_default_str();

  CompareOptions compareOpts;
  auto* compare = app.add_subcommand("compare", "merge summary.json files of several runs");
  compare->add_option("reports", compareOpts.reports, "summary.json files")->required();
  compare->add_option("--out-dir", compareOpts.outDir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e) {
    app.exit(e);
    return EXIT_USAGE;
  }

  if (*run) {
    if (!outDir.empty()) {
      runOpts.outDir = outDir;
    }
    return cmdRun(runOpts, std::cout, std::cerr);
  }
  if (*analyze) {
    return cmdAnalyze(analyzeOpts, std::cout, std::cerr);
  }
  return cmdCompare(compareOpts, std::cout, std::cerr);
}
