#include "lexnet/csv.hpp"

#include <cmath>
#include <cstdio>

namespace lexnet {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string format_mlu(double value) {
  return format_number(std::round(value * 1000.0) / 1000.0);
}

std::string csv_field(std::string_view value) {
  bool needs_quotes = value.find_first_of(",\"\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    out += c;
    if (c == '"') out += c;
  }
  out += '"';
  return out;
}

std::string CsvTable::to_string() const {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return out;
}

CsvTable to_csv(std::span<const GrowthPoint> points) {
  CsvTable table;
  table.header = {"label", "size", "arcs", "avg_degree"};
  for (const auto& point : points)
    table.rows.push_back({point.label, std::to_string(point.size), std::to_string(point.arcs),
                          format_number(point.average_degree)});
  return table;
}

CsvTable to_csv(std::span<const StageSummaryRow> rows) {
  CsvTable table;
  table.header = {"stage", "files", "utterances", "morphemes",
                  "mlu",   "size",  "avg_degree", "mlu_basis"};
  for (const auto& row : rows)
    table.rows.push_back({row.stage_label, std::to_string(row.files),
                          std::to_string(row.utterances), std::to_string(row.morphemes),
                          format_mlu(row.mlu), std::to_string(row.size),
                          format_number(row.average_degree),
                          row.word_based ? "words" : "mor"});
  return table;
}

CsvTable to_csv(const DyadReport& report) {
  CsvTable table;
  table.header = {"label",       "child_size",        "child_arcs",  "child_avg_degree",
                  "mother_size", "mother_arcs",       "mother_avg_degree",
                  "delta_size",  "delta_degree"};
  for (const auto& row : report.rows)
    table.rows.push_back({row.stage_label, std::to_string(row.child.size),
                          std::to_string(row.child.arcs),
                          format_number(row.child.average_degree),
                          std::to_string(row.mother.size), std::to_string(row.mother.arcs),
                          format_number(row.mother.average_degree),
                          std::to_string(row.delta_size), format_number(row.delta_degree)});
  return table;
}

CsvTable to_csv(std::span<const ShiftRecord> records) {
  CsvTable table;
  table.header = {"word"};
  if (!records.empty())
    for (const auto& [label, status] : records.front().statuses) table.header.push_back(label);
  for (const auto& record : records) {
    std::vector<std::string> row{record.word};
    for (const auto& [label, status] : record.statuses)
      row.emplace_back(to_string(status));
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable to_csv(const DegreeReport& report) {
  CsvTable table;
  table.header = {"rank", "in_word", "out_word"};
  std::size_t count = std::max(report.top_in.size(), report.top_out.size());
  for (std::size_t i = 0; i < count; ++i)
    table.rows.push_back({std::to_string(i + 1),
                          i < report.top_in.size() ? report.top_in[i] : "",
                          i < report.top_out.size() ? report.top_out[i] : ""});
  return table;
}

}  // namespace lexnet
