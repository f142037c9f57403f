#pragma once

#include <iosfwd>
#include <string>

#include "lingloop/letters.hpp"

namespace lingloop::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;

struct CommonOptions {
  std::string language;  // empty -> derive from the table filename stem
  std::string format = "text";
  LetterCountPolicy policy;
  bool color = false;
};

struct ClassifyOptions {
  std::string table_path;
  CommonOptions common;
};

struct TrajectoryOptions {
  std::string table_path;
  int start = 1;
  CommonOptions common;
};

struct IterateOptions {
  std::string table_path;
  std::string words_path;
  int rounds = 8;
  std::string out_path;  // empty -> CSV to stdout
  std::string svg_path;  // empty -> no SVG
  bool dedup = false;
  CommonOptions common;
};

struct ReportOptions {
  std::string tables_dir;
  CommonOptions common;
};

int cmd_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_trajectory(const TrajectoryOptions& options, std::ostream& out, std::ostream& err);
int cmd_iterate(const IterateOptions& options, std::ostream& out, std::ostream& err);
int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err);

// True when text output may use ANSI colors: stdout is a terminal and the
// NO_COLOR convention is not in effect.
bool use_color(bool stdout_is_tty);

std::string read_file(const std::string& path);  // throws IoError

}  // namespace lingloop::cli
