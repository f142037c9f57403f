#include "lingloop/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace lingloop {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_proportion(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", p);
  return buf;
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

std::string render_basins(const Classification& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.basin_sizes.size(); ++i) {
    if (i) os << ' ';
    os << render_attractor(c.basin_sizes[i].first) << ':' << c.basin_sizes[i].second;
  }
  return os.str();
}

std::string render_cycles(const std::vector<Cycle>& cycles) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) os << ' ';
    os << '(' << join_ints(cycles[i].states, " ") << ')';
  }
  return os.str();
}

ordered_json attractor_json(const Attractor& a) {
  if (a.is_fixed_point()) return {{"kind", "fixed_point"}, {"value", a.fixed_point()}};
  return {{"kind", "cycle"}, {"states", a.cycle().states}};
}

ordered_json row_json(const ReportRow& row) {
  const Classification& c = row.classification;
  ordered_json j;
  j["language"] = row.language;
  j["nmax"] = row.nmax;
  j["label"] = label_kind_name(c.label);
  j["label_text"] = c.label_text();
  j["constants"] = c.constants;
  j["fixed_points"] = c.fixed_points;
  ordered_json cycles = ordered_json::array();
  for (const Cycle& cy : c.cycles) cycles.push_back(cy.states);
  j["cycles"] = std::move(cycles);
  ordered_json basins = ordered_json::array();
  for (const auto& [attractor, size] : c.basin_sizes)
    basins.push_back({{"attractor", attractor_json(attractor)}, {"size", size}});
  j["basins"] = std::move(basins);
  return j;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) { return a.language < b.language; });
}

int label_rank(LabelKind kind) {
  switch (kind) {
    case LabelKind::Positive: return 0;
    case LabelKind::BiPositive: return 1;
    case LabelKind::TriPositive: return 2;
    case LabelKind::MultiPositive: return 3;
    case LabelKind::Negative: return 4;
  }
  return 5;
}

std::string group_label(const Classification& c) {
  return c.label == LabelKind::Negative ? "Negative" : c.label_text();
}

std::string colored(const std::string& text, bool negative, bool color) {
  if (!color) return text;
  return (negative ? "\x1b[31m" : "\x1b[32m") + text + "\x1b[0m";
}

}  // namespace

const char* label_kind_name(LabelKind kind) {
  switch (kind) {
    case LabelKind::Positive: return "Positive";
    case LabelKind::BiPositive: return "BiPositive";
    case LabelKind::TriPositive: return "TriPositive";
    case LabelKind::MultiPositive: return "MultiPositive";
    case LabelKind::Negative: return "Negative";
  }
  return "?";
}

std::string render_attractor(const Attractor& attractor) {
  if (attractor.is_fixed_point()) return std::to_string(attractor.fixed_point());
  return "(" + join_ints(attractor.cycle().states, " ") + ")";
}

std::string render_classification_text(const ReportRow& row, bool color) {
  const Classification& c = row.classification;
  std::ostringstream os;
  os << "language: " << row.language << '\n';
  os << "nmax: " << row.nmax << '\n';
  os << "label: " << colored(c.label_text(), c.label == LabelKind::Negative, color) << '\n';
  os << "fixed points: " << (c.fixed_points.empty() ? "-" : join_ints(c.fixed_points, " "))
     << '\n';
  os << "cycles: " << (c.cycles.empty() ? "-" : render_cycles(c.cycles)) << '\n';
  os << "basins: " << render_basins(c) << '\n';
  return os.str();
}

std::string render_rows_csv(std::vector<ReportRow> rows) {
  sort_rows(rows);
  std::string out = "language,nmax,label,constants,fixed_points,cycles,basins\n";
  for (const ReportRow& row : rows) {
    const Classification& c = row.classification;
    out += row.language + ',' + std::to_string(row.nmax) + ',' + label_kind_name(c.label) +
           ',' + join_ints(c.constants, " ") + ',' + join_ints(c.fixed_points, " ") + ',' +
           render_cycles(c.cycles) + ',' + render_basins(c) + '\n';
  }
  return out;
}

std::string render_classification_json(const ReportRow& row) {
  return row_json(row).dump(2) + "\n";
}

std::string render_report_json(std::vector<ReportRow> rows) {
  sort_rows(rows);
  ordered_json j;
  ordered_json jrows = ordered_json::array();
  for (const ReportRow& row : rows) jrows.push_back(row_json(row));
  j["rows"] = std::move(jrows);

  std::map<std::pair<int, std::vector<int>>, std::vector<const ReportRow*>> groups;
  for (const ReportRow& row : rows)
    groups[{label_rank(row.classification.label), row.classification.constants}].push_back(&row);
  ordered_json jgroups = ordered_json::array();
  for (const auto& [key, members] : groups) {
    ordered_json g;
    g["label"] = group_label(members.front()->classification);
    ordered_json langs = ordered_json::array();
    for (const ReportRow* row : members) langs.push_back(row->language);
    g["languages"] = std::move(langs);
    g["count"] = members.size();
    jgroups.push_back(std::move(g));
  }
  j["groups"] = std::move(jgroups);
  return j.dump(2) + "\n";
}

std::string render_report_text(std::vector<ReportRow> rows, bool color) {
  sort_rows(rows);
  std::map<std::pair<int, std::vector<int>>, std::vector<const ReportRow*>> groups;
  for (const ReportRow& row : rows)
    groups[{label_rank(row.classification.label), row.classification.constants}].push_back(&row);

  std::ostringstream os;
  for (const auto& [key, members] : groups) {
    const bool negative = members.front()->classification.label == LabelKind::Negative;
    os << colored(group_label(members.front()->classification), negative, color) << " ["
       << members.size() << "]\n";
    for (const ReportRow* row : members) {
      const Classification& c = row->classification;
      os << "  " << row->language << "  nmax=" << row->nmax;
      if (!c.fixed_points.empty()) os << "  fixed points: " << join_ints(c.fixed_points, " ");
      if (!c.cycles.empty()) os << "  cycles: " << render_cycles(c.cycles);
      os << "  basins: " << render_basins(c) << '\n';
    }
  }
  os << "total: " << rows.size() << " languages\n";
  return os.str();
}

std::string render_trajectory_text(const Trajectory& trajectory, const NumeralTable& table) {
  std::ostringstream os;
  os << trajectory.start;
  for (std::size_t i = 0; i + 1 < trajectory.states.size(); ++i)
    os << " → " << table.spelling(trajectory.states[i]) << '(' << trajectory.states[i + 1]
       << ')';
  const Attractor& a = trajectory.attractor;
  if (a.is_fixed_point()) {
    os << " [fixed point " << a.fixed_point() << ']';
  } else if (a.cycle().states.size() == 2) {
    os << " [cycle " << a.cycle().states[0] << "↔" << a.cycle().states[1] << ']';
  } else {
    os << " [cycle " << join_ints(a.cycle().states, "→") << "→" << a.cycle().states[0] << ']';
  }
  return os.str();
}

std::string render_iteration_csv(const CorpusReport& report) {
  std::string out = "iteration,length,count,proportion\n";
  for (const LengthDistribution& dist : report.series) {
    for (const auto& [length, count] : dist.counts) {
      out += std::to_string(dist.iteration) + ',' + std::to_string(length) + ',' +
             std::to_string(count) + ',' + format_proportion(dist.proportion(length)) + '\n';
    }
  }
  return out;
}

std::string svg_stacked_bars(const CorpusReport& report) {
  static constexpr const char* kPalette[12] = {
      "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
      "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};
  constexpr double kLeft = 56, kRight = 16, kTop = 34, kBottom = 44;
  constexpr double kBarWidth = 46, kGap = 14, kPlotHeight = 260;

  const int bars = static_cast<int>(report.series.size());
  const double width = kLeft + kRight + bars * kBarWidth + (bars - 1) * kGap;
  const double height = kTop + kPlotHeight + kBottom;

  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << num(width / 2) << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">"
      << report.language << ": word-length proportions per iteration</text>\n";

  for (int tick = 0; tick <= 4; ++tick) {
    const double frac = tick / 4.0;
    const double y = kTop + kPlotHeight * (1.0 - frac);
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(width - kRight) << "\" y2=\"" << num(y)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(frac)
        << "</text>\n";
  }

  for (int i = 0; i < bars; ++i) {
    const LengthDistribution& dist = report.series[static_cast<std::size_t>(i)];
    const double x = kLeft + i * (kBarWidth + kGap);
    double cumulative = 0.0;
    for (const auto& [length, count] : dist.counts) {
      const double p = dist.proportion(length);
      const double y0 = kTop + kPlotHeight * (1.0 - cumulative - p);
      const double segment = kPlotHeight * p;
      svg << "<rect x=\"" << num(x) << "\" y=\"" << num(y0) << "\" width=\"" << num(kBarWidth)
          << "\" height=\"" << num(segment) << "\" fill=\""
          << kPalette[(length - 1) % 12] << "\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
      if (segment >= 12.0)
        svg << "<text x=\"" << num(x + kBarWidth / 2) << "\" y=\"" << num(y0 + segment / 2 + 4)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << length << "</text>\n";
      cumulative += p;
    }
    svg << "<text x=\"" << num(x + kBarWidth / 2) << "\" y=\"" << num(kTop + kPlotHeight + 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << i
        << "</text>\n";
  }

  svg << "<text x=\"" << num(kLeft + (width - kLeft - kRight) / 2) << "\" y=\""
      << num(height - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">iteration"
         "</text>\n";
  svg << "<text x=\"14\" y=\"" << num(kTop + kPlotHeight / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 14 "
      << num(kTop + kPlotHeight / 2) << ")\">proportion</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lingloop
