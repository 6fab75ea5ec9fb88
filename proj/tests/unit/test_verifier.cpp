#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "subcount/errors.hpp"
#include "subcount/report.hpp"
#include "subcount/verifier.hpp"

using namespace subcount;

namespace {

std::size_t count_order(const Corpus& c, std::uint64_t n)
{
  return std::count_if(c.groups.begin(), c.groups.end(), [n](auto const& g) { return g->order() == n; });
}

const VerdictReport& by_id(const std::vector<VerdictReport>& rs, const std::string& id)
{
  auto it = std::find_if(rs.begin(), rs.end(), [&](auto const& r) { return r.check_id == id; });
  REQUIRE(it != rs.end());
  return *it;
}

CorpusRecords small_records(std::uint64_t max_order)
{
  CorpusConfig cfg;
  cfg.max_order = max_order;
  cfg.psl_max_q = max_order >= 60 ? 7 : 1;
  return compute_records(build_corpus(cfg), cfg.caps, 0);
}

} // namespace

TEST_CASE("corpus contents")
{
  CorpusConfig cfg;
  cfg.max_order = 60;
  cfg.spec_list = {"A(5)"};
  auto c = build_corpus(cfg);
  CHECK(c.errors.empty());
  CHECK(count_order(c, 30) == 4);
  std::set<std::string> names;
  for (auto const& g : c.groups)
    names.insert(g->name());
  CHECK(names.size() == c.groups.size());
  CHECK(names.count("A(5)") == 1);
  CHECK(std::is_sorted(c.groups.begin(), c.groups.end(), [](auto const& a, auto const& b) {
    return a->order() != b->order() ? a->order() < b->order() : a->name() < b->name();
  }));
}

TEST_CASE("bad specs and files are collected, not fatal")
{
  CorpusConfig cfg;
  cfg.max_order = 6;
  cfg.psl_max_q = 1;
  cfg.spec_list = {"Z(0)", "Y(2)"};
  cfg.ingest_paths = {"does_not_exist.json"};
  auto c = build_corpus(cfg);
  CHECK(c.errors.size() == 3);
  CHECK_FALSE(c.groups.empty());
  auto data = compute_records(c, cfg.caps, 1);
  auto r = corpus_error_report(data);
  CHECK(r.check_id == "CORPUS");
  CHECK(r.status == Status::Fail);
  CHECK(r.violations.size() == 3);
}

TEST_CASE("trivial corpus makes every corpus check vacuous")
{
  CorpusConfig cfg;
  cfg.max_order = 1;
  cfg.psl_max_q = 1;
  auto data = compute_records(build_corpus(cfg), cfg.caps, 0);
  REQUIRE(data.groups.size() == 1);
  for (auto const& r : {check_richards(data), check_nilpotency_cyc(data), check_nilpotency_sub(data),
                        check_supersolvable_divisor_criterion(data), check_supersolvable_cyc(data),
                        check_supersolvable_sub(data), check_solvable_sub(data),
                        check_strong_domination_cyc(data), check_semidirect_subgroups(data)}) {
    CAPTURE(r.check_id);
    CHECK(r.status == Status::Vacuous);
    CHECK(r.violations.empty());
  }
  CHECK(check_phi_sum(data).status == Status::Vacuous);
  CHECK(scan_conjecture(data).status == Status::Vacuous);
}

TEST_CASE("all-solvable corpus passes the conjecture scan with a note")
{
  auto data = small_records(30);
  auto conj = scan_conjecture(data);
  CHECK(conj.status == Status::Pass);
  CHECK(conj.notes.find("all solvable") != std::string::npos);
}

TEST_CASE("isomorphic duplicates are dropped and recorded")
{
  CorpusConfig cfg;
  cfg.max_order = 12;
  cfg.psl_max_q = 3;
  auto c = build_corpus(cfg);
  CHECK(count_order(c, 6) == 2);
  CHECK(count_order(c, 12) == 5);
  auto has = [&](const std::string& a, const std::string& b) {
    return std::find(c.duplicates.begin(), c.duplicates.end(), std::pair{a, b}) != c.duplicates.end();
  };
  CHECK(has("S(3)", "SD(3,2,2)"));
  CHECK(has("PSL(2,3)", "A(4)"));

  cfg.spec_list = {"S(3)"};
  auto requested = build_corpus(cfg);
  CHECK(std::any_of(requested.groups.begin(), requested.groups.end(),
                    [](auto const& g) { return g->name() == "S(3)"; }));
  CHECK(count_order(requested, 6) == 2);
}

TEST_CASE("corpus checks pass on a small corpus")
{
  auto data = small_records(120);
  REQUIRE(data.errors.empty());
  CorpusConfig cfg;
  cfg.product_max_order = 120;
  for (auto const& r : {check_phi_sum(data), check_richards(data), check_product_inequality(data, cfg),
                        check_strong_domination_cyc(data), check_amiri(data, cfg.caps),
                        check_extension_domination(data, cfg.caps), check_semidirect_subgroups(data),
                        check_nilpotency_cyc(data), check_nilpotency_sub(data), check_noncyclic_bounds(data),
                        check_supersolvable_divisor_criterion(data), check_supersolvable_cyc(data),
                        check_supersolvable_sub(data), check_solvable_sub(data), scan_conjecture(data)}) {
    CAPTURE(r.check_id);
    CAPTURE(r.notes);
    CHECK(r.status == Status::Pass);
    CHECK(r.violations.empty());
    CHECK(r.groups_checked > 0);
  }
}

TEST_CASE("conjecture near-misses include A5")
{
  auto data = small_records(60);
  auto r = scan_conjecture(data);
  CHECK(r.status == Status::Pass);
  CHECK(r.notes.find("A(5)") != std::string::npos);
}

TEST_CASE("records are identical for any worker count")
{
  CorpusConfig cfg;
  cfg.max_order = 80;
  cfg.psl_max_q = 5;
  auto c = build_corpus(cfg);
  auto one = compute_records(c, cfg.caps, 1);
  auto four = compute_records(c, cfg.caps, 4);
  REQUIRE(one.records.size() == four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].name == four.records[i].name);
    CHECK(one.records[i].cyc == four.records[i].cyc);
    CHECK(one.records[i].sub == four.records[i].sub);
  }
  CHECK(format_report({check_nilpotency_cyc(one), check_solvable_sub(one)}, ReportFormat::Json) ==
        format_report({check_nilpotency_cyc(four), check_solvable_sub(four)}, ReportFormat::Json));
}

TEST_CASE("sharpness witnesses")
{
  auto w = sharpness_witness(3, WitnessKind::NilpCyc);
  CHECK(w.group.order() == 30);
  CHECK(w.expected == 10);
  auto s = sharpness_witness(3, WitnessKind::SuperSub);
  CHECK(s.group.order() == 60);
  CHECK(s.expected == 20);
  auto a = sharpness_witness(4, WitnessKind::SolvSub);
  CHECK(a.group.order() == 420);
  CHECK(a.expected == 118);
  CHECK_THROWS_AS(sharpness_witness(1, WitnessKind::NilpCyc), Error);
  CHECK_THROWS_AS(sharpness_witness(2, WitnessKind::SolvSub), Error);
  for (auto kind : kAllWitnessKinds) {
    CAPTURE(witness_kind_name(kind));
    CHECK(parse_witness_kind(witness_kind_name(kind)) == kind);
    auto r = check_sharpness(kind, 2, 4);
    CHECK(r.status == Status::Pass);
  }
  CHECK_FALSE(parse_witness_kind("NOPE"));
}

TEST_CASE("stand-alone lemmas")
{
  auto inv = verify_involution_lemma({3, 5, 7, 9, 11, 13});
  CHECK(inv.status == Status::Pass);
  CHECK(inv.groups_checked == 6);
  auto ineq = verify_prime_inequalities(10000);
  CHECK(ineq.status == Status::Pass);
  CHECK(ineq.notes.find("q=3") != std::string::npos);
  auto eq = verify_eq31(200);
  CHECK(eq.status == Status::Pass);
  CHECK(eq.groups_checked > 0);
}

TEST_CASE("errata flags exactly the known discrepancies")
{
  auto r = errata_report();
  CHECK(r.check_id == "ERRATA");
  CHECK(is_informational(r));
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].detail.find("59") != std::string::npos);
}

TEST_CASE("full default verification")
{
  auto reports = run_verification(CorpusConfig{});
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](auto const& a, auto const& b) { return a.check_id < b.check_id; }));
  for (auto const& r : reports) {
    CAPTURE(r.check_id);
    if (is_informational(r))
      continue;
    CHECK(r.status == Status::Pass);
  }
  for (auto id : {"THM-2.2", "THM-2.3", "THM-2.6", "THM-3.1", "THM-3.2", "THM-4.1", "THM-4.2", "THM-4.5",
                  "THM-5.3", "CONJ-5.4", "LEM-2.8", "LEM-2.9", "EQ-3.1"})
    CHECK(by_id(reports, id).status == Status::Pass);
}

TEST_CASE("verification reports are byte-identical for any worker count")
{
  CorpusConfig cfg;
  cfg.max_order = 72;
  cfg.psl_max_q = 7;
  cfg.lemma29_q_max = 500;
  cfg.eq31_max_order = 150;
  cfg.product_max_order = 120;
  cfg.jobs = 1;
  auto serial = format_report(run_verification(cfg), ReportFormat::Json);
  cfg.jobs = 3;
  auto pooled = format_report(run_verification(cfg), ReportFormat::Json);
  CHECK(serial == pooled);
}
