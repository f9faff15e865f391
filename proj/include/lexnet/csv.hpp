#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/analysis.hpp"
#include "lexnet/build.hpp"
#include "lexnet/hits.hpp"

namespace lexnet {

/// Numbers render with up to six significant digits, trailing zeros trimmed
/// (printf %.6g).
std::string format_number(double value);

/// Value rounded to three decimals first, then rendered; used for MLU columns.
std::string format_mlu(double value);

/// RFC-4180-style field quoting: applied only when the field contains a comma,
/// quote, or newline.
std::string csv_field(std::string_view value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

/// label,size,arcs,avg_degree
CsvTable to_csv(std::span<const GrowthPoint> points);

/// stage,files,utterances,morphemes,mlu,size,avg_degree,mlu_basis
CsvTable to_csv(std::span<const StageSummaryRow> rows);

/// label,child_size,child_arcs,child_avg_degree,mother_size,mother_arcs,
/// mother_avg_degree,delta_size,delta_degree
CsvTable to_csv(const DyadReport& report);

/// word, then one status column per stage label.
CsvTable to_csv(std::span<const ShiftRecord> records);

/// rank,in_word,out_word — the two lists side by side, padded with blanks.
CsvTable to_csv(const DegreeReport& report);

}  // namespace lexnet
