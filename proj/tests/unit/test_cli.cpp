#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "subcount/errors.hpp"
#include "subcount/report.hpp"

namespace {

int run(const std::string& args)
{
  std::string cmd = std::string(SUBCOUNT_CLI) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("exit codes")
{
  CHECK(run("invariants \"A(4) x Z(5)\"") == 0);
  CHECK(run("invariants \"Z(0)\"") == 2);
  CHECK(run("invariants \"PSL(2,banana)\"") == 2);
  CHECK(run("invariants") == 2);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("verify --max-order abc") == 2);
  CHECK(run("invariants \"S(3)\" --format xml") == 2);
  CHECK(run("lattice \"S(4)\" --lattice-cap 10") == 2);
  CHECK(run("--help") == 0);
  CHECK(run("errata") == 0);
  CHECK(run("witness --t-min 2 --t-max 3") == 0);
  CHECK(run("conjecture --max-order 1 --psl-max-q 1 --spec \"Z(0)\"") == 1);
  CHECK(run("conjecture --max-order 1 --psl-max-q 1 --ingest no_such_file.json") == 1);
}

TEST_CASE("machine reports are written and parse back")
{
  const std::string json = "subcount_cli_test.json", csv = "subcount_cli_test.csv";
  REQUIRE(run("conjecture --max-order 60 --psl-max-q 5 --format csv --out " + csv + " --json " + json) == 0);
  auto from_json = subcount::parse_reports(slurp(json), subcount::ReportFormat::Json);
  auto from_csv = subcount::parse_reports(slurp(csv), subcount::ReportFormat::Csv);
  CHECK(from_json == from_csv);
  REQUIRE(from_json.size() == 1);
  CHECK(from_json[0].check_id == "CONJ-5.4");
  CHECK(from_json[0].status == subcount::Status::Pass);

  REQUIRE(run("conjecture --max-order 1 --psl-max-q 1 --spec \"Z(0)\" --json " + json) == 1);
  auto failed = subcount::parse_reports(slurp(json), subcount::ReportFormat::Json);
  CHECK(failed.size() == 2);
  CHECK(failed[0].status == subcount::Status::Fail);
  std::remove(json.c_str());
  std::remove(csv.c_str());
}
