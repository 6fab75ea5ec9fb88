// subcount: invariants, lattices and the verification suite from the shell.
//
// Exit status: 0 success, 1 a check found violations, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcount/subcount.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string spec;
  std::vector<std::string> specs;
  std::vector<std::string> ingest;
  std::string format = "table";
  std::string out_path;
  std::string json_path;
  std::uint64_t max_order = 300;
  std::uint64_t order_cap = 0;
  std::uint64_t lattice_cap = 0;
  std::uint64_t iso_cap = 0;
  std::uint64_t psl_max_q = 13;
  std::uint32_t t_min = 2;
  std::uint32_t t_max = 4;
  bool no_squarefree = false;
  unsigned jobs = 0;
};

struct StringDeleter {
  void operator()(char* s) const { sc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(sc_group* g) const { sc_group_free(g); }
};
struct ReportsDeleter {
  void operator()(sc_reports* r) const { sc_reports_free(r); }
};

sc_format format_of(const std::string& f)
{
  if (f == "csv")
    return SC_FORMAT_CSV;
  if (f == "json")
    return SC_FORMAT_JSON;
  return SC_FORMAT_TABLE;
}

sc_caps caps_of(const Options& o)
{
  sc_caps caps;
  sc_caps_default(&caps);
  if (o.order_cap)
    caps.order = o.order_cap;
  if (o.lattice_cap)
    caps.lattice = o.lattice_cap;
  if (o.iso_cap)
    caps.isomorphism = o.iso_cap;
  return caps;
}

int fail(sc_status status)
{
  std::cerr << "error (" << sc_status_name(status) << "): " << sc_last_error() << '\n';
  return kExitUsage;
}

bool write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error (io): cannot write " << path << '\n';
    return false;
  }
  return true;
}

// Formatted text goes to --out when given, otherwise to stdout.
bool emit(const Options& o, const std::string& text)
{
  if (o.out_path.empty()) {
    std::cout << text;
    return true;
  }
  return write_file(o.out_path, text);
}

sc_status load_group(const Options& o, const sc_caps& caps, sc_group** g)
{
  return sc_group_from_spec(o.spec.c_str(), &caps, g);
}

int run_invariants(const Options& o)
{
  const sc_caps caps = caps_of(o);
  sc_group* raw = nullptr;
  if (auto s = load_group(o, caps, &raw); s != SC_OK)
    return fail(s);
  std::unique_ptr<sc_group, GroupDeleter> g(raw);
  char* text = nullptr;
  if (auto s = sc_group_invariants_text(g.get(), &caps, format_of(o.format), &text); s != SC_OK)
    return fail(s);
  CString owned(text);
  if (!o.json_path.empty()) {
    char* json = nullptr;
    if (auto s = sc_group_invariants_text(g.get(), &caps, SC_FORMAT_JSON, &json); s != SC_OK)
      return fail(s);
    CString owned_json(json);
    if (!write_file(o.json_path, json))
      return kExitUsage;
  }
  return emit(o, text) ? kExitOk : kExitUsage;
}

int run_lattice(const Options& o)
{
  const sc_caps caps = caps_of(o);
  sc_group* raw = nullptr;
  if (auto s = load_group(o, caps, &raw); s != SC_OK)
    return fail(s);
  std::unique_ptr<sc_group, GroupDeleter> g(raw);
  char* text = nullptr;
  if (auto s = sc_group_lattice_text(g.get(), &caps, format_of(o.format), &text); s != SC_OK)
    return fail(s);
  CString owned(text);
  return emit(o, text) ? kExitOk : kExitUsage;
}

// Shared tail of the report-producing subcommands.
int finish_reports(const Options& o, sc_reports* raw, const char* what, bool decides_exit)
{
  std::unique_ptr<sc_reports, ReportsDeleter> reports(raw);
  char* text = nullptr;
  if (auto s = sc_reports_format(reports.get(), format_of(o.format), &text); s != SC_OK)
    return fail(s);
  CString owned(text);

  const bool failed = decides_exit && sc_reports_failed(reports.get());
  if (!o.json_path.empty()) {
    char* json = nullptr;
    if (auto s = sc_reports_format(reports.get(), SC_FORMAT_JSON, &json); s != SC_OK)
      return fail(s);
    CString owned_json(json);
    if (!write_file(o.json_path, json))
      return kExitUsage;
  }

  std::size_t failing = 0, vacuous = 0;
  const std::size_t n = sc_reports_count(reports.get());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string status = sc_report_status(reports.get(), i);
    failing += status == "fail";
    vacuous += status == "vacuous";
  }
  if (!emit(o, text))
    return kExitUsage;
  std::cerr << what << ": " << n << " reports, " << failing << " fail, " << vacuous << " vacuous"
            << (failed ? "; violations found" : "") << '\n';
  return failed ? kExitViolations : kExitOk;
}

sc_verify_config config_of(const Options& o, std::vector<const char*>& specs,
                           std::vector<const char*>& paths)
{
  sc_verify_config cfg;
  sc_verify_config_default(&cfg);
  cfg.max_order = o.max_order;
  cfg.include_squarefree = o.no_squarefree ? 0 : 1;
  for (auto const& s : o.specs)
    specs.push_back(s.c_str());
  for (auto const& p : o.ingest)
    paths.push_back(p.c_str());
  cfg.specs = specs.data();
  cfg.spec_count = specs.size();
  cfg.ingest_paths = paths.data();
  cfg.ingest_count = paths.size();
  cfg.psl_max_q = o.psl_max_q;
  cfg.witness_t_min = o.t_min;
  cfg.witness_t_max = o.t_max;
  cfg.caps = caps_of(o);
  cfg.jobs = o.jobs;
  return cfg;
}

int run_verify(const Options& o, bool conjecture_only)
{
  std::vector<const char*> specs, paths;
  const sc_verify_config cfg = config_of(o, specs, paths);
  sc_reports* raw = nullptr;
  auto s = conjecture_only ? sc_conjecture(&cfg, &raw) : sc_verify(&cfg, &raw);
  if (s != SC_OK)
    return fail(s);
  return finish_reports(o, raw, conjecture_only ? "conjecture" : "verify", true);
}

int run_witness(const Options& o)
{
  const sc_caps caps = caps_of(o);
  sc_reports* raw = nullptr;
  if (auto s = sc_witness(o.t_min, o.t_max, &caps, &raw); s != SC_OK)
    return fail(s);
  return finish_reports(o, raw, "witness", true);
}

int run_errata(const Options& o)
{
  const sc_caps caps = caps_of(o);
  sc_reports* raw = nullptr;
  if (auto s = sc_errata(&caps, &raw); s != SC_OK)
    return fail(s);
  return finish_reports(o, raw, "errata", false);
}

void add_output_flags(CLI::App* cmd, Options& o)
{
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write the formatted output to this file");
  cmd->add_option("--json", o.json_path, "Also write a JSON copy to this file");
}

void add_cap_flags(CLI::App* cmd, Options& o)
{
  cmd->add_option("--order-cap", o.order_cap, "Largest group order to materialize");
  cmd->add_option("--lattice-cap", o.lattice_cap, "Largest group order for subgroup lattices");
  cmd->add_option("--iso-cap", o.iso_cap, "Largest group order for isomorphism tests");
}

void add_corpus_flags(CLI::App* cmd, Options& o)
{
  cmd->add_option("--max-order", o.max_order, "Largest order in the built-in corpus")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{20000}))
      ->capture_default_str();
  cmd->add_flag("--no-squarefree", o.no_squarefree, "Skip enumeration of squarefree-order groups");
  cmd->add_option("--ingest", o.ingest, "Generator file to add to the corpus (repeatable)");
  cmd->add_option("--spec", o.specs, "Group spec to add to the corpus (repeatable)");
  cmd->add_option("--psl-max-q", o.psl_max_q, "Include PSL(2,q) for prime powers q up to this")
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker count (0 = available parallelism)");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cyclic and total subgroup counts of finite groups, and checks of the bounds built on them"};
  app.set_version_flag("--version", sc_version());
  app.require_subcommand(1);
  app.footer("Group specs:\n"
             "  spec := atom (' x ' atom)*\n"
             "  atom := Z(n) | D(n) | Q(2^k) | S(n) | A(n) | SL(2,q) | PSL(2,q) | SD(a,b,r)\n"
             "  D(n) has order 2n; SD(a,b,r) is Z_a x| Z_b with the generator of Z_b acting as x -> r x\n"
             "Exit status: 0 success, 1 violations found, 2 usage or input error");
  Options o;

  auto* invariants = app.add_subcommand("invariants", "Invariant row for one group");
  invariants->add_option("spec", o.spec, "Group spec, e.g. \"A(4) x Z(5)\"")->required();
  add_output_flags(invariants, o);
  add_cap_flags(invariants, o);

  auto* lattice = app.add_subcommand("lattice", "Every subgroup of one group");
  lattice->add_option("spec", o.spec, "Group spec")->required();
  add_output_flags(lattice, o);
  add_cap_flags(lattice, o);

  auto* verify = app.add_subcommand("verify", "Run every check over the corpus");
  add_corpus_flags(verify, o);
  add_output_flags(verify, o);
  add_cap_flags(verify, o);
  verify->add_option("--t-min", o.t_min, "Smallest t for sharpness witnesses")->capture_default_str();
  verify->add_option("--t-max", o.t_max, "Largest t for sharpness witnesses")->capture_default_str();

  auto* conjecture = app.add_subcommand("conjecture", "Scan the corpus for counterexamples to the cyc conjecture");
  add_corpus_flags(conjecture, o);
  add_output_flags(conjecture, o);
  add_cap_flags(conjecture, o);

  auto* witness = app.add_subcommand("witness", "Build and check the sharpness witnesses");
  witness->add_option("--t-min", o.t_min, "Smallest t")->capture_default_str();
  witness->add_option("--t-max", o.t_max, "Largest t")->capture_default_str();
  add_output_flags(witness, o);
  add_cap_flags(witness, o);

  auto* errata = app.add_subcommand("errata", "Compare published figures with computed values");
  add_output_flags(errata, o);
  add_cap_flags(errata, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error (usage): " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (invariants->parsed())
    return run_invariants(o);
  if (lattice->parsed())
    return run_lattice(o);
  if (verify->parsed())
    return run_verify(o, false);
  if (conjecture->parsed())
    return run_verify(o, true);
  if (witness->parsed())
    return run_witness(o);
  return run_errata(o);
}
