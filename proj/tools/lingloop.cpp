#include <unistd.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lingloop/cli.hpp"

namespace {

void add_policy_flags(CLI::App* cmd, lingloop::cli::CommonOptions& common) {
  cmd->add_flag("--count-hyphens", common.policy.count_hyphens,
                "Count hyphens as letters");
  cmd->add_flag("--count-spaces", common.policy.count_spaces, "Count spaces as letters");
}

void add_format_flag(CLI::App* cmd, lingloop::cli::CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lingloop: letter-count dynamics of numeral spellings"};
  app.require_subcommand(1);

  lingloop::cli::ClassifyOptions classify_options;
  auto* classify = app.add_subcommand(
      "classify", "Classify one language table: label, fixed points, cycles, basins");
  classify->add_option("--table", classify_options.table_path, "Numeral table (TSV)")
      ->required();
  classify->add_option("--language", classify_options.common.language,
                       "Language tag (default: filename stem)");
  add_format_flag(classify, classify_options.common);
  add_policy_flags(classify, classify_options.common);

  lingloop::cli::TrajectoryOptions trajectory_options;
  auto* trajectory =
      app.add_subcommand("trajectory", "Print the orbit of one start value");
  trajectory->add_option("--table", trajectory_options.table_path, "Numeral table (TSV)")
      ->required();
  trajectory->add_option("n", trajectory_options.start, "Start value")->required();
  trajectory->add_option("--language", trajectory_options.common.language,
                         "Language tag (default: filename stem)");
  add_policy_flags(trajectory, trajectory_options.common);

  lingloop::cli::IterateOptions iterate_options;
  auto* iterate = app.add_subcommand(
      "iterate", "Iterate a wordlist's length distribution through the step map");
  iterate->add_option("--table", iterate_options.table_path, "Numeral table (TSV)")
      ->required();
  iterate->add_option("--words", iterate_options.words_path, "Wordlist, one word per line")
      ->required();
  iterate->add_option("--rounds", iterate_options.rounds, "Iterations to run")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  iterate->add_option("--out", iterate_options.out_path, "CSV output path (default: stdout)");
  iterate->add_option("--svg", iterate_options.svg_path, "Also write a stacked-bar SVG here");
  iterate->add_flag("--dedup", iterate_options.dedup, "Drop duplicate words");
  iterate->add_option("--language", iterate_options.common.language,
                      "Language tag (default: filename stem)");
  add_policy_flags(iterate, iterate_options.common);

  lingloop::cli::ReportOptions report_options;
  auto* report = app.add_subcommand(
      "report", "Classify every table in a directory and print a combined report");
  report->add_option("--tables", report_options.tables_dir, "Directory of .tsv tables")
      ->required();
  add_format_flag(report, report_options.common);
  add_policy_flags(report, report_options.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lingloop::cli::kExitValidation;
  }

  const bool color = lingloop::cli::use_color(isatty(fileno(stdout)) != 0);
  classify_options.common.color = color;
  report_options.common.color = color;

  if (classify->parsed())
    return lingloop::cli::cmd_classify(classify_options, std::cout, std::cerr);
  if (trajectory->parsed())
    return lingloop::cli::cmd_trajectory(trajectory_options, std::cout, std::cerr);
  if (iterate->parsed())
    return lingloop::cli::cmd_iterate(iterate_options, std::cout, std::cerr);
  return lingloop::cli::cmd_report(report_options, std::cout, std::cerr);
}
