#include <doctest.h>

#include <string>
#include <vector>

#include "subcount/constructors.hpp"
#include "subcount/errors.hpp"
#include "subcount/invariants.hpp"
#include "subcount/report.hpp"
#include "subcount/subgroups.hpp"

using namespace subcount;

namespace {

std::vector<VerdictReport> sample()
{
  return {
    {"THM-3.1", Status::Pass, 42, {}, "hypothesis held for 12 of 42"},
    {"THM-9.9", Status::Fail, 3, {{"S(3)", "cyc 5 > bound 4"}, {"A \"quoted\", name", "line\nbreak"}},
     "note, with comma"},
    {"EMPTY", Status::Vacuous, 0, {}, ""},
  };
}

} // namespace

TEST_CASE("status names")
{
  for (auto s : {Status::Pass, Status::Fail, Status::Vacuous})
    CHECK(parse_status(status_name(s)) == s);
  CHECK_FALSE(parse_status("maybe"));
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK_FALSE(parse_report_format("xml"));
}

TEST_CASE("csv and json round-trip")
{
  for (auto fmt : {ReportFormat::Csv, ReportFormat::Json}) {
    auto text = format_report(sample(), fmt);
    CHECK(parse_reports(text, fmt) == sample());
  }
}

TEST_CASE("empty csv is the header only")
{
  auto text = format_report({}, ReportFormat::Csv);
  CHECK(text == "check_id,status,groups_checked,violations,notes\r\n");
  CHECK(parse_reports(text, ReportFormat::Csv).empty());
  CHECK(parse_reports(format_report({}, ReportFormat::Json), ReportFormat::Json).empty());
}

TEST_CASE("table rows")
{
  std::vector<VerdictReport> one{{"THM-3.1", Status::Pass, 7, {}, ""}};
  auto text = format_report(one, ReportFormat::Table);
  CHECK(text.find("pass") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  auto failing = format_report(sample(), ReportFormat::Table);
  CHECK(failing.find("S(3): cyc 5 > bound 4") != std::string::npos);
}

TEST_CASE("malformed input")
{
  CHECK_THROWS_AS(parse_reports("not json", ReportFormat::Json), Error);
  CHECK_THROWS_AS(parse_reports("[{\"check_id\": 1}]", ReportFormat::Json), Error);
  CHECK_THROWS_AS(parse_reports("a,b\r\n", ReportFormat::Csv), Error);
  CHECK_THROWS_AS(parse_reports("check_id,status,groups_checked,violations,notes\r\nX,bogus,1,[],\r\n",
                                ReportFormat::Csv),
                  Error);
  CHECK_THROWS_AS(parse_reports("x", ReportFormat::Table), Error);
}

TEST_CASE("record and lattice tables")
{
  auto rec = invariant_record(alternating(4));
  auto csv = format_records({rec}, ReportFormat::Csv);
  CHECK(csv.find("A(4),12,2,8,10,false,false,false,true,false,,") != std::string::npos);
  auto json = format_records({rec}, ReportFormat::Json);
  CHECK(json.find("\"sub\": 10") != std::string::npos);
  Caps caps;
  caps.lattice = 4;
  auto capped = invariant_record(alternating(4), caps);
  CHECK(format_records({capped}, ReportFormat::Table).find(" - ") != std::string::npos);
  CHECK(format_records({capped}, ReportFormat::Json).find("\"sub\": null") != std::string::npos);

  Group g = symmetric(3);
  auto lat = all_subgroups(g);
  auto lt = format_lattice(g, lat, ReportFormat::Csv);
  CHECK(std::count(lt.begin(), lt.end(), '\n') == 7);
}
