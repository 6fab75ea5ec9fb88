#ifndef SUBCOUNT_REPORT_HPP
#define SUBCOUNT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcount/invariants.hpp"
#include "subcount/subgroups.hpp"

namespace subcount {

enum class Status { Pass, Fail, Vacuous };

const char* status_name(Status s) noexcept;
std::optional<Status> parse_status(std::string_view text) noexcept;

struct Violation {
  std::string group;
  std::string detail; // both sides of the failed comparison

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of one check over a corpus. status is Fail iff violations is
/// non-empty, Vacuous iff nothing satisfied the check's hypothesis.
struct VerdictReport {
  std::string check_id;
  Status status = Status::Vacuous;
  std::uint64_t groups_checked = 0;
  std::vector<Violation> violations;
  std::string notes;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

enum class ReportFormat { Table, Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

/// table: aligned columns plus one indented line per violation.
/// csv: header check_id,status,groups_checked,violations,notes; the
///      violations cell holds a JSON array of {group, detail}.
/// json: array of objects keyed like VerdictReport.
std::string format_report(const std::vector<VerdictReport>& reports, ReportFormat format);

/// Inverse of format_report for Csv and Json. Throws Error(Format).
std::vector<VerdictReport> parse_reports(std::string_view text, ReportFormat format);

/// One flat row per record.
std::string format_records(const std::vector<InvariantRecord>& records, ReportFormat format);

/// One row per subgroup: size, index, normal/cyclic/maximal flags and
/// generator labels.
std::string format_lattice(const Group& g, const SubgroupLattice& lattice, ReportFormat format);

} // namespace subcount

#endif // SUBCOUNT_REPORT_HPP
