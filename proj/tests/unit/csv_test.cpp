#include "lexnet/csv.hpp"

#include <string>
#include <vector>

#include "doctest.h"

using namespace lexnet;

TEST_CASE("numbers render with six significant digits, trimmed") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.8) == "0.8");
  CHECK(format_number(4.0 / 9.0) == "0.444444");
  CHECK(format_number(1234567.0) == "1.23457e+06");
  CHECK(format_number(0.000123456789) == "0.000123457");
  CHECK(format_number(-2.5) == "-2.5");
}

TEST_CASE("mean-length columns round to three decimals first") {
  CHECK(format_mlu(1464.0 / 1091.0) == "1.342");
  CHECK(format_mlu(1690.0 / 1186.0) == "1.425");
  CHECK(format_mlu(2622.0 / 1369.0) == "1.915");
  CHECK(format_mlu(7227.0 / 2351.0) == "3.074");
  CHECK(format_mlu(9.0 / 5.0) == "1.8");
  CHECK(format_mlu(4.0) == "4");
  // without the pre-rounding this would print 0.444444
  CHECK(format_mlu(4.0 / 9.0) == "0.444");
}

TEST_CASE("fields are quoted only when they need to be") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("") == "");
  CHECK(csv_field("with space") == "with space");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("table rendering") {
  CsvTable table;
  table.header = {"word", "note"};
  table.rows = {{"a", "article, indefinite"}, {"dog", "noun"}};
  CHECK(table.to_string() ==
        "word,note\n"
        "a,\"article, indefinite\"\n"
        "dog,noun\n");
}

TEST_CASE("growth points to csv") {
  std::vector<GrowthPoint> points = {{"1", 9, 4, 4.0 / 9.0}, {"2", 10, 8, 0.8}};
  CHECK(to_csv(points).to_string() ==
        "label,size,arcs,avg_degree\n"
        "1,9,4,0.444444\n"
        "2,10,8,0.8\n");
}

TEST_CASE("stage summary to csv") {
  std::vector<StageSummaryRow> rows = {
      {"S1", 3, 112, 151, 151.0 / 112.0, 59, 1.2372881355932204, false},
      {"early S4", 5, 240, 731, 731.0 / 240.0, 214, 2.5, true},
  };
  CHECK(to_csv(rows).to_string() ==
        "stage,files,utterances,morphemes,mlu,size,avg_degree,mlu_basis\n"
        "S1,3,112,151,1.348,59,1.23729,mor\n"
        "early S4,5,240,731,3.046,214,2.5,words\n");
}

TEST_CASE("dyad report to csv") {
  DyadReport report;
  report.rows.push_back({"S2", {"S2", 9, 4, 4.0 / 9.0}, {"S2", 10, 8, 0.8}, 1, 0.8 - 4.0 / 9.0});
  CHECK(to_csv(report).to_string() ==
        "label,child_size,child_arcs,child_avg_degree,mother_size,mother_arcs,"
        "mother_avg_degree,delta_size,delta_degree\n"
        "S2,9,4,0.444444,10,8,0.8,1,0.355556\n");
}

TEST_CASE("shift records to csv") {
  std::vector<ShiftRecord> records = {
      {"a", {{"S1", WordStatus::Hub}, {"S2", WordStatus::Authority}}},
      {"the", {{"S1", WordStatus::Neither}, {"S2", WordStatus::HubAndAuthority}}},
  };
  CHECK(to_csv(records).to_string() ==
        "word,S1,S2\n"
        "a,Hub,Authority\n"
        "the,--,H&A\n");

  CHECK(to_csv(std::span<const ShiftRecord>{}).to_string() == "word\n");
}

TEST_CASE("degree report to csv pads the shorter list") {
  DegreeReport report;
  report.top_in = {"a", "it"};
  report.top_out = {"you"};
  CHECK(to_csv(report).to_string() ==
        "rank,in_word,out_word\n"
        "1,a,you\n"
        "2,it,\n");
}
