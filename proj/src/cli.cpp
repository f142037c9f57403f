#include "lingloop/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lingloop/corpus.hpp"
#include "lingloop/dynamics.hpp"
#include "lingloop/errors.hpp"
#include "lingloop/report.hpp"

namespace lingloop::cli {
namespace {

namespace fs = std::filesystem;

std::string language_for(const std::string& table_path, const CommonOptions& common) {
  if (!common.language.empty()) return common.language;
  return fs::path(table_path).stem().string();
}

NumeralTable load_table_file(const std::string& path, const CommonOptions& common) {
  return load_table(read_file(path), common.policy, language_for(path, common));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("cannot write file: " + path);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

ReportRow make_row(const NumeralTable& table, const LetterCountPolicy& policy) {
  return ReportRow{table.language(), table.nmax(), classify(table, policy)};
}

}  // namespace

bool use_color(bool stdout_is_tty) {
  return stdout_is_tty && std::getenv("NO_COLOR") == nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path);
  return buffer.str();
}

int cmd_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NumeralTable table = load_table_file(options.table_path, options.common);
    const ReportRow row = make_row(table, options.common.policy);
    if (options.common.format == "csv")
      out << render_rows_csv({row});
    else if (options.common.format == "json")
      out << render_classification_json(row);
    else
      out << render_classification_text(row, options.common.color);
    return kExitOk;
  });
}

int cmd_trajectory(const TrajectoryOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NumeralTable table = load_table_file(options.table_path, options.common);
    const Trajectory t = trajectory(options.start, table, options.common.policy);
    out << render_trajectory_text(t, table) << '\n';
    out << "tail: step " << t.tail_index << '\n';
    return kExitOk;
  });
}

int cmd_iterate(const IterateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NumeralTable table = load_table_file(options.table_path, options.common);
    auto words = load_wordlist(read_file(options.words_path), options.common.policy);
    if (options.dedup) {
      std::vector<WordEntry> unique;
      for (auto& entry : words)
        if (std::find(unique.begin(), unique.end(), entry) == unique.end())
          unique.push_back(std::move(entry));
      words = std::move(unique);
    }
    for (const WordEntry& entry : words)
      if (entry.length > table.nmax())
        throw ValidationError("word \"" + entry.word + "\" has " +
                              std::to_string(entry.length) + " letters, exceeding table domain [1, " +
                              std::to_string(table.nmax()) + "]");

    const CorpusReport report = iterate_distribution(initial_distribution(words), table,
                                                     options.common.policy, options.rounds);
    const std::string csv = render_iteration_csv(report);
    const std::string summary =
        "converged_at=" +
        (report.converged_at ? std::to_string(*report.converged_at) : std::string("-")) + '\n';
    if (options.out_path.empty()) {
      out << csv;
      err << summary;  // keep stdout parseable as CSV
    } else {
      write_file(options.out_path, csv);
      out << summary;
    }
    if (!options.svg_path.empty()) write_file(options.svg_path, svg_stacked_bars(report));
    return kExitOk;
  });
}

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(options.tables_dir, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".tsv")
        files.push_back(entry.path());
    if (ec) throw IoError("cannot read directory: " + options.tables_dir);
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      err << "error: no tables found in " << options.tables_dir << '\n';
      return kExitValidation;
    }

    std::vector<ReportRow> rows;
    bool any_failed = false;
    for (const fs::path& file : files) {
      try {
        CommonOptions file_options = options.common;
        file_options.language.clear();  // always the filename stem in report mode
        rows.push_back(
            make_row(load_table_file(file.string(), file_options), options.common.policy));
      } catch (const Error& e) {
        err << file.string() << ": " << e.what() << '\n';
        any_failed = true;
      }
    }

    if (options.common.format == "csv")
      out << render_rows_csv(rows);
    else if (options.common.format == "json")
      out << render_report_json(rows);
    else
      out << render_report_text(rows, options.common.color);
    return any_failed ? kExitValidation : kExitOk;
  });
}

}  // namespace lingloop::cli
