#include "subcount/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "subcount/errors.hpp"

namespace subcount {

using nlohmann::json;

const char* status_name(Status s) noexcept
{
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Vacuous: return "vacuous";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view text) noexcept
{
  for (auto s : {Status::Pass, Status::Fail, Status::Vacuous})
    if (text == status_name(s))
      return s;
  return std::nullopt;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept
{
  if (text == "table")
    return ReportFormat::Table;
  if (text == "csv")
    return ReportFormat::Csv;
  if (text == "json")
    return ReportFormat::Json;
  return std::nullopt;
}

namespace {

json violations_json(const std::vector<Violation>& vs)
{
  json arr = json::array();
  for (auto const& v : vs)
    arr.push_back({{"group", v.group}, {"detail", v.detail}});
  return arr;
}

json report_json(const VerdictReport& r)
{
  return {{"check_id", r.check_id},
          {"status", status_name(r.status)},
          {"groups_checked", r.groups_checked},
          {"violations", violations_json(r.violations)},
          {"notes", r.notes}};
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::string pad(const std::string& s, std::size_t width)
{
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::vector<std::string>>& trailers = {})
{
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c)
    width[c] = header[c].size();
  for (auto const& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c)
      out += c + 1 == cells.size() ? cells[c] : pad(cells[c], width[c]) + "  ";
    while (!out.empty() && out.back() == ' ')
      out.pop_back();
    return out + '\n';
  };

  std::string out = line(header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += line(rows[i]);
    if (i < trailers.size())
      for (auto const& t : trailers[i])
        out += "    " + t + '\n';
  }
  return out;
}

Violation violation_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("group") || !j.contains("detail") || !j["group"].is_string() ||
      !j["detail"].is_string())
    throw Error(ErrorCode::Format, "violation needs string fields group and detail");
  return {j["group"].get<std::string>(), j["detail"].get<std::string>()};
}

Status status_from_text(const std::string& s)
{
  auto st = parse_status(s);
  if (!st)
    throw Error(ErrorCode::Format, "unknown status '" + s + "'");
  return *st;
}

VerdictReport report_from_json(const json& j)
{
  for (auto key : {"check_id", "status", "groups_checked", "violations", "notes"})
    if (!j.is_object() || !j.contains(key))
      throw Error(ErrorCode::Format, std::string("report object lacks '") + key + "'");
  if (!j["check_id"].is_string() || !j["status"].is_string() ||
      !j["groups_checked"].is_number_unsigned() || !j["violations"].is_array() ||
      !j["notes"].is_string())
    throw Error(ErrorCode::Format, "report fields have the wrong types");
  VerdictReport r;
  r.check_id = j["check_id"].get<std::string>();
  r.status = status_from_text(j["status"].get<std::string>());
  r.groups_checked = j["groups_checked"].get<std::uint64_t>();
  for (auto const& v : j["violations"])
    r.violations.push_back(violation_from_json(v));
  r.notes = j["notes"].get<std::string>();
  return r;
}

// RFC 4180 records; quoted fields may span lines.
std::vector<std::vector<std::string>> split_csv(std::string_view text)
{
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
        ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted)
    throw Error(ErrorCode::Format, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t parse_count(const std::string& s)
{
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::Format, "groups_checked is not a count: '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Format, "groups_checked out of range: '" + s + "'");
  }
}

constexpr const char* kCsvHeader = "check_id,status,groups_checked,violations,notes";

std::string opt_text(const std::optional<std::uint64_t>& v)
{
  return v ? std::to_string(*v) : "-";
}

std::string opt_text(const std::optional<bool>& v)
{
  return v ? (*v ? "true" : "false") : "-";
}

std::string bool_text(bool b)
{
  return b ? "true" : "false";
}

} // namespace

std::string format_report(const std::vector<VerdictReport>& reports, ReportFormat format)
{
  switch (format) {
  case ReportFormat::Json: {
    json arr = json::array();
    for (auto const& r : reports)
      arr.push_back(report_json(r));
    return arr.dump(2) + '\n';
  }
  case ReportFormat::Csv: {
    std::string out = std::string(kCsvHeader) + "\r\n";
    for (auto const& r : reports) {
      out += csv_field(r.check_id) + ',' + status_name(r.status) + ',' +
             std::to_string(r.groups_checked) + ',' + csv_field(violations_json(r.violations).dump()) +
             ',' + csv_field(r.notes) + "\r\n";
    }
    return out;
  }
  case ReportFormat::Table: {
    std::vector<std::vector<std::string>> rows, trailers;
    for (auto const& r : reports) {
      rows.push_back({r.check_id, status_name(r.status), std::to_string(r.groups_checked),
                      std::to_string(r.violations.size()), r.notes});
      std::vector<std::string> lines;
      for (auto const& v : r.violations)
        lines.push_back("! " + v.group + ": " + v.detail);
      trailers.push_back(std::move(lines));
    }
    return render_table({"check_id", "status", "groups_checked", "violations", "notes"}, rows,
                        trailers);
  }
  }
  return {};
}

std::vector<VerdictReport> parse_reports(std::string_view text, ReportFormat format)
{
  std::vector<VerdictReport> out;
  if (format == ReportFormat::Json) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::Format, std::string("report is not valid JSON: ") + e.what());
    }
    if (!doc.is_array())
      throw Error(ErrorCode::Format, "report JSON must be an array");
    for (auto const& j : doc)
      out.push_back(report_from_json(j));
    return out;
  }
  if (format == ReportFormat::Csv) {
    auto rows = split_csv(text);
    if (rows.empty())
      throw Error(ErrorCode::Format, "CSV report lacks a header row");
    std::string header;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
      header += (i ? "," : "") + rows[0][i];
    if (header != kCsvHeader)
      throw Error(ErrorCode::Format, "unexpected CSV header '" + header + "'");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      auto const& row = rows[i];
      if (row.size() != 5)
        throw Error(ErrorCode::Format, "CSV row " + std::to_string(i) + " has " +
                                           std::to_string(row.size()) + " fields");
      VerdictReport r;
      r.check_id = row[0];
      r.status = status_from_text(row[1]);
      r.groups_checked = parse_count(row[2]);
      json vs;
      try {
        vs = json::parse(row[3]);
      } catch (const json::parse_error&) {
        throw Error(ErrorCode::Format, "violations cell is not a JSON array");
      }
      if (!vs.is_array())
        throw Error(ErrorCode::Format, "violations cell is not a JSON array");
      for (auto const& v : vs)
        r.violations.push_back(violation_from_json(v));
      r.notes = row[4];
      out.push_back(std::move(r));
    }
    return out;
  }
  throw Error(ErrorCode::Format, "table output cannot be parsed back");
}

std::string format_records(const std::vector<InvariantRecord>& records, ReportFormat format)
{
  static const std::vector<std::string> header{
      "name",          "order",    "t",        "cyc",        "sub",  "cyclic", "nilpotent",
      "supersolvable", "solvable", "gq_sylow", "semidirect", "notes"};

  if (format == ReportFormat::Json) {
    json arr = json::array();
    for (auto const& r : records) {
      json j{{"name", r.name},           {"order", r.order},
             {"t", r.t},                 {"cyc", r.cyc},
             {"sub", nullptr},           {"cyclic", r.is_cyclic},
             {"nilpotent", r.nilpotent}, {"supersolvable", nullptr},
             {"solvable", r.solvable},   {"gq_sylow", r.has_generalized_quaternion_sylow()},
             {"semidirect", nullptr},    {"notes", r.notes}};
      if (r.sub)
        j["sub"] = *r.sub;
      if (r.supersolvable)
        j["supersolvable"] = *r.supersolvable;
      if (r.semidirect)
        j["semidirect"] = r.semidirect->to_string();
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + '\n';
  }

  std::vector<std::vector<std::string>> rows;
  for (auto const& r : records) {
    rows.push_back({r.name, std::to_string(r.order), std::to_string(r.t), std::to_string(r.cyc),
                    opt_text(r.sub), bool_text(r.is_cyclic), bool_text(r.nilpotent),
                    opt_text(r.supersolvable), bool_text(r.solvable),
                    bool_text(r.has_generalized_quaternion_sylow()),
                    r.semidirect ? r.semidirect->to_string() : "-", r.notes});
  }
  if (format == ReportFormat::Table)
    return render_table(header, rows);

  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c)
    out += (c ? "," : "") + header[c];
  out += "\r\n";
  for (auto& row : rows) {
    for (auto& cell : row)
      if (cell == "-")
        cell.clear();
    for (std::size_t c = 0; c < row.size(); ++c)
      out += (c ? "," : "") + csv_field(row[c]);
    out += "\r\n";
  }
  return out;
}

std::string format_lattice(const Group& g, const SubgroupLattice& lattice, ReportFormat format)
{
  auto gens_of = [&](const SubgroupSet& h) {
    std::vector<std::string> out;
    for (auto e : h.generators)
      out.push_back(g.label(e));
    return out;
  };

  if (format == ReportFormat::Json) {
    json arr = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto const& e = lattice[i];
      arr.push_back({{"id", i},
                     {"order", e.subgroup.size()},
                     {"index", g.order() / e.subgroup.size()},
                     {"normal", e.is_normal},
                     {"cyclic", e.is_cyclic},
                     {"maximal", e.is_maximal},
                     {"generators", gens_of(e.subgroup)}});
    }
    return arr.dump(2) + '\n';
  }

  const std::vector<std::string> header{"id", "order", "index", "normal", "cyclic", "maximal", "generators"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto const& e = lattice[i];
    std::string gens;
    for (auto const& l : gens_of(e.subgroup))
      gens += (gens.empty() ? "" : " ") + l;
    rows.push_back({std::to_string(i), std::to_string(e.subgroup.size()),
                    std::to_string(g.order() / e.subgroup.size()), bool_text(e.is_normal),
                    bool_text(e.is_cyclic), bool_text(e.is_maximal), gens.empty() ? "-" : gens});
  }
  if (format == ReportFormat::Table)
    return render_table(header, rows);
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c)
    out += (c ? "," : "") + header[c];
  out += "\r\n";
  for (auto const& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out += (c ? "," : "") + csv_field(row[c] == "-" ? std::string() : row[c]);
    out += "\r\n";
  }
  return out;
}

} // namespace subcount
