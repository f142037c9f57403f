#pragma once

#include <string>
#include <vector>

#include "lingloop/corpus.hpp"
#include "lingloop/dynamics.hpp"

namespace lingloop {

// One language's verdict as rendered by the CLI. Rendering is a pure
// function of the row; rows are sorted by language tag before output.
struct ReportRow {
  std::string language;
  int nmax = 0;
  Classification classification;
};

const char* label_kind_name(LabelKind kind);

std::string render_attractor(const Attractor& attractor);  // "4" or "(4 5)"

std::string render_classification_text(const ReportRow& row, bool color = false);
std::string render_rows_csv(std::vector<ReportRow> rows);
std::string render_classification_json(const ReportRow& row);
std::string render_report_json(std::vector<ReportRow> rows);
std::string render_report_text(std::vector<ReportRow> rows, bool color = false);

// "13 → thirteen(8) → eight(5) → five(4) → four(4) [fixed point 4]"
std::string render_trajectory_text(const Trajectory& trajectory, const NumeralTable& table);

// Long-format series: header "iteration,length,count,proportion", one row
// per (iteration, length) with a nonzero count, proportions with 12 digits.
std::string render_iteration_csv(const CorpusReport& report);

// Minimal stacked-bar chart of per-iteration length proportions.
std::string svg_stacked_bars(const CorpusReport& report);

}  // namespace lingloop
