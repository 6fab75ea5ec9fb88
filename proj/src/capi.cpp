#include "subcount/subcount.h"

#include <algorithm>
#include <cstring>
#include <new>

#include "subcount/errors.hpp"
#include "subcount/group_spec.hpp"
#include "subcount/invariants.hpp"
#include "subcount/report.hpp"
#include "subcount/subgroups.hpp"
#include "subcount/verifier.hpp"

struct sc_group {
  subcount::Group group;
};

struct sc_reports {
  std::vector<subcount::VerdictReport> reports;
};

namespace {

using namespace subcount;

thread_local std::string last_error;

sc_status status_of(ErrorCode code)
{
  switch (code) {
  case ErrorCode::Parse: return SC_ERR_PARSE;
  case ErrorCode::Domain:
  case ErrorCode::NotPrimePower:
  case ErrorCode::NotSquarefree:
  case ErrorCode::EvenCharacteristic:
  case ErrorCode::SizeMismatch: return SC_ERR_DOMAIN;
  case ErrorCode::OrderCapExceeded: return SC_ERR_ORDER_CAP;
  case ErrorCode::LatticeCapExceeded: return SC_ERR_LATTICE_CAP;
  case ErrorCode::IsomorphismCapExceeded: return SC_ERR_ISOMORPHISM_CAP;
  case ErrorCode::InvalidPermutation:
  case ErrorCode::InvalidTable:
  case ErrorCode::InvalidAction: return SC_ERR_INVALID_INPUT;
  case ErrorCode::Format: return SC_ERR_FORMAT;
  case ErrorCode::Io: return SC_ERR_IO;
  case ErrorCode::InternalInconsistency: return SC_ERR_INTERNAL;
  }
  return SC_ERR_INTERNAL;
}

template <class Fn>
sc_status guarded(Fn&& fn)
{
  last_error.clear();
  try {
    fn();
    return SC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return SC_ERR_INTERNAL;
}

sc_status null_argument(const char* what)
{
  last_error = std::string(what) + " is NULL";
  return SC_ERR_NULL_ARGUMENT;
}

Caps to_caps(const sc_caps* c)
{
  Caps caps;
  if (c) {
    caps.order = c->order;
    caps.lattice = c->lattice;
    caps.subgroup_count = c->subgroup_count;
    caps.isomorphism = c->isomorphism;
  }
  return caps;
}

ReportFormat to_format(sc_format f)
{
  switch (f) {
  case SC_FORMAT_CSV: return ReportFormat::Csv;
  case SC_FORMAT_JSON: return ReportFormat::Json;
  default: return ReportFormat::Table;
  }
}

char* dup_string(const std::string& s)
{
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

CorpusConfig to_config(const sc_verify_config* c)
{
  CorpusConfig cfg;
  if (!c)
    return cfg;
  cfg.max_order = c->max_order;
  cfg.include_squarefree_enumeration = c->include_squarefree != 0;
  for (std::size_t i = 0; i < c->spec_count; ++i)
    if (c->specs && c->specs[i])
      cfg.spec_list.emplace_back(c->specs[i]);
  for (std::size_t i = 0; i < c->ingest_count; ++i)
    if (c->ingest_paths && c->ingest_paths[i])
      cfg.ingest_paths.emplace_back(c->ingest_paths[i]);
  cfg.psl_max_q = c->psl_max_q;
  cfg.witness_t_min = c->witness_t_min;
  cfg.witness_t_max = c->witness_t_max;
  cfg.caps = to_caps(&c->caps);
  cfg.jobs = c->jobs;
  return cfg;
}

const VerdictReport* report_at(const sc_reports* r, std::size_t i)
{
  return r && i < r->reports.size() ? &r->reports[i] : nullptr;
}

} // namespace

extern "C" {

const char* sc_version(void)
{
  return "0.1.0";
}

const char* sc_status_name(sc_status status)
{
  switch (status) {
  case SC_OK: return "ok";
  case SC_ERR_NULL_ARGUMENT: return "null_argument";
  case SC_ERR_PARSE: return "parse";
  case SC_ERR_DOMAIN: return "domain";
  case SC_ERR_ORDER_CAP: return "order_cap";
  case SC_ERR_LATTICE_CAP: return "lattice_cap";
  case SC_ERR_ISOMORPHISM_CAP: return "isomorphism_cap";
  case SC_ERR_INVALID_INPUT: return "invalid_input";
  case SC_ERR_FORMAT: return "format";
  case SC_ERR_IO: return "io";
  case SC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sc_last_error(void)
{
  return last_error.c_str();
}

void sc_string_free(char* s)
{
  delete[] s;
}

void sc_caps_default(sc_caps* caps)
{
  if (!caps)
    return;
  const Caps d;
  *caps = {d.order, d.lattice, d.subgroup_count, d.isomorphism};
}

void sc_verify_config_default(sc_verify_config* cfg)
{
  if (!cfg)
    return;
  const CorpusConfig d;
  *cfg = {};
  cfg->max_order = d.max_order;
  cfg->include_squarefree = d.include_squarefree_enumeration ? 1 : 0;
  cfg->psl_max_q = d.psl_max_q;
  cfg->witness_t_min = d.witness_t_min;
  cfg->witness_t_max = d.witness_t_max;
  sc_caps_default(&cfg->caps);
  cfg->jobs = d.jobs;
}

sc_status sc_group_from_spec(const char* spec, const sc_caps* caps, sc_group** out)
{
  if (!spec)
    return null_argument("spec");
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sc_group{build_group_spec(spec, to_caps(caps))}; });
}

sc_status sc_group_from_file(const char* path, const sc_caps* caps, sc_group** out)
{
  if (!path)
    return null_argument("path");
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sc_group{load_group_file(path, to_caps(caps))}; });
}

void sc_group_free(sc_group* g)
{
  delete g;
}

const char* sc_group_name(const sc_group* g)
{
  return g ? g->group.name().c_str() : "";
}

uint64_t sc_group_order(const sc_group* g)
{
  return g ? g->group.order() : 0;
}

sc_status sc_group_cyc(const sc_group* g, sc_cyc_method method, uint64_t* out)
{
  if (!g || !out)
    return null_argument(!g ? "group" : "out");
  return guarded([&] {
    *out = method == SC_CYC_PHI_SUM ? cyc_by_phi_sum(g->group) : cyc_by_enumeration(g->group);
  });
}

sc_status sc_group_sub(const sc_group* g, const sc_caps* caps, uint64_t* out)
{
  if (!g || !out)
    return null_argument(!g ? "group" : "out");
  return guarded([&] { *out = sub_count(g->group, to_caps(caps)); });
}

sc_status sc_group_involutions(const sc_group* g, uint64_t* out)
{
  if (!g || !out)
    return null_argument(!g ? "group" : "out");
  return guarded([&] { *out = involution_count(g->group); });
}

sc_status sc_group_invariants(const sc_group* g, const sc_caps* caps, sc_invariants* out)
{
  if (!g || !out)
    return null_argument(!g ? "group" : "out");
  return guarded([&] {
    const auto r = invariant_record(g->group, to_caps(caps));
    *out = {};
    out->order = r.order;
    out->t = r.t;
    out->cyc = r.cyc;
    out->has_sub = r.sub ? 1 : 0;
    out->sub = r.sub.value_or(0);
    out->is_cyclic = r.is_cyclic;
    out->nilpotent = r.nilpotent;
    out->supersolvable = r.supersolvable ? (*r.supersolvable ? 1 : 0) : -1;
    out->solvable = r.solvable;
    out->generalized_quaternion_sylow = r.has_generalized_quaternion_sylow();
  });
}

sc_status sc_group_invariants_text(const sc_group* g, const sc_caps* caps, sc_format format, char** out)
{
  if (!g || !out)
    return null_argument(!g ? "group" : "out");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(format_records({invariant_record(g->group, to_caps(caps))}, to_format(format)));
  });
}

sc_status sc_group_lattice_text(const sc_group* g, const sc_caps* caps, sc_format format, char** out)
{
  if (!g || !out)
    return null_argument(!g ? "group" : "out");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(format_lattice(g->group, all_subgroups(g->group, to_caps(caps)), to_format(format)));
  });
}

sc_status sc_witness_group(uint32_t t, const char* kind, const sc_caps* caps, sc_group** out,
                           uint64_t* expected)
{
  if (!kind || !out)
    return null_argument(!kind ? "kind" : "out");
  *out = nullptr;
  auto k = parse_witness_kind(kind);
  if (!k) {
    last_error = std::string("unknown witness kind '") + kind + "'";
    return SC_ERR_DOMAIN;
  }
  return guarded([&] {
    Witness w = sharpness_witness(t, *k, to_caps(caps));
    if (expected)
      *expected = w.expected;
    *out = new sc_group{std::move(w.group)};
  });
}

sc_status sc_verify(const sc_verify_config* cfg, sc_reports** out)
{
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sc_reports{run_verification(to_config(cfg))}; });
}

sc_status sc_conjecture(const sc_verify_config* cfg, sc_reports** out)
{
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto c = to_config(cfg);
    const auto data = compute_records(build_corpus(c), c.caps, c.jobs);
    std::vector<VerdictReport> reports;
    if (!data.errors.empty())
      reports.push_back(corpus_error_report(data));
    reports.push_back(scan_conjecture(data));
    *out = new sc_reports{std::move(reports)};
  });
}

sc_status sc_witness(uint32_t t_min, uint32_t t_max, const sc_caps* caps, sc_reports** out)
{
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    std::vector<VerdictReport> reports;
    for (auto kind : kAllWitnessKinds)
      reports.push_back(check_sharpness(kind, t_min, t_max, to_caps(caps)));
    std::sort(reports.begin(), reports.end(),
              [](const VerdictReport& a, const VerdictReport& b) { return a.check_id < b.check_id; });
    *out = new sc_reports{std::move(reports)};
  });
}

sc_status sc_errata(const sc_caps* caps, sc_reports** out)
{
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sc_reports{{errata_report(to_caps(caps))}}; });
}

size_t sc_reports_count(const sc_reports* r)
{
  return r ? r->reports.size() : 0;
}

const char* sc_report_check_id(const sc_reports* r, size_t i)
{
  auto p = report_at(r, i);
  return p ? p->check_id.c_str() : "";
}

const char* sc_report_status(const sc_reports* r, size_t i)
{
  auto p = report_at(r, i);
  return p ? status_name(p->status) : "";
}

uint64_t sc_report_groups_checked(const sc_reports* r, size_t i)
{
  auto p = report_at(r, i);
  return p ? p->groups_checked : 0;
}

size_t sc_report_violation_count(const sc_reports* r, size_t i)
{
  auto p = report_at(r, i);
  return p ? p->violations.size() : 0;
}

int sc_reports_failed(const sc_reports* r)
{
  if (!r)
    return 0;
  for (auto const& rep : r->reports)
    if (!rep.violations.empty() && !is_informational(rep))
      return 1;
  return 0;
}

sc_status sc_reports_format(const sc_reports* r, sc_format format, char** out)
{
  if (!r || !out)
    return null_argument(!r ? "reports" : "out");
  *out = nullptr;
  return guarded([&] { *out = dup_string(format_report(r->reports, to_format(format))); });
}

void sc_reports_free(sc_reports* r)
{
  delete r;
}

} // extern "C"
