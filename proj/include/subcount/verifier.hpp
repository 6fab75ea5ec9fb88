#ifndef SUBCOUNT_VERIFIER_HPP
#define SUBCOUNT_VERIFIER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subcount/group.hpp"
#include "subcount/invariants.hpp"
#include "subcount/report.hpp"

namespace subcount {

struct CorpusConfig {
  std::uint64_t max_order = 300;
  bool include_squarefree_enumeration = true;
  std::vector<std::string> spec_list;
  std::vector<std::string> ingest_paths;
  std::uint64_t psl_max_q = 13; // PSL(2,q) enters regardless of max_order
  std::uint32_t witness_t_min = 2;
  std::uint32_t witness_t_max = 4;
  std::uint64_t product_max_order = 240; // THM-2.3 pairs
  std::uint64_t eq31_max_order = 500;
  std::uint64_t lemma29_q_max = 10000;
  std::vector<std::uint64_t> involution_q{3, 5, 7, 9, 11, 13};
  Caps caps;
  unsigned jobs = 0; // 0 = hardware concurrency
};

using GroupPtr = std::shared_ptr<const Group>;

struct CorpusError {
  std::string source; // spec text, file path or family name
  std::string message;
};

struct Corpus {
  std::vector<GroupPtr> groups; // sorted by (order, name), names unique
  std::vector<CorpusError> errors;
  std::vector<std::pair<std::string, std::string>> duplicates; // (dropped, isomorphic kept group)
};

/// Built-in families, squarefree enumeration, spec_list and ingested files.
/// Construction failures are collected in errors.
Corpus build_corpus(const CorpusConfig& cfg);

struct CorpusRecords {
  std::vector<GroupPtr> groups;
  std::vector<InvariantRecord> records; // parallel to groups
  std::vector<CorpusError> errors;      // build and record failures
  unsigned jobs = 0;                    // pool size for checks that build groups
};

/// Computes invariant_record for every group on a worker pool. Output order
/// matches the input regardless of jobs.
CorpusRecords compute_records(const Corpus& corpus, const Caps& caps, unsigned jobs);

VerdictReport check_phi_sum(const CorpusRecords& data);                                  // LEM-2.4
VerdictReport check_richards(const CorpusRecords& data);                                 // THM-2.2
VerdictReport check_product_inequality(const CorpusRecords& data, const CorpusConfig& cfg); // THM-2.3
VerdictReport check_strong_domination_cyc(const CorpusRecords& data);                    // LEM-2.5
VerdictReport check_amiri(const CorpusRecords& data, const Caps& caps);                  // THM-2.6
VerdictReport check_extension_domination(const CorpusRecords& data, const Caps& caps);   // THM-2.7
VerdictReport check_semidirect_subgroups(const CorpusRecords& data);                     // LEM-HL
VerdictReport check_nilpotency_cyc(const CorpusRecords& data);                           // THM-3.1
VerdictReport check_nilpotency_sub(const CorpusRecords& data);                           // THM-3.2
VerdictReport check_noncyclic_bounds(const CorpusRecords& data);                         // REM-3.4
VerdictReport check_supersolvable_divisor_criterion(const CorpusRecords& data);          // THM-4.1
VerdictReport check_supersolvable_cyc(const CorpusRecords& data);                        // THM-4.2
VerdictReport check_supersolvable_sub(const CorpusRecords& data);                        // THM-4.5
VerdictReport check_solvable_sub(const CorpusRecords& data);                             // THM-5.3
VerdictReport scan_conjecture(const CorpusRecords& data);                                // CONJ-5.4

enum class WitnessKind { NilpCyc, NilpSub, SuperCyc, SuperSub, SolvSub };

const char* witness_kind_name(WitnessKind kind) noexcept; // "NILP_CYC", ...
std::optional<WitnessKind> parse_witness_kind(std::string_view text) noexcept;
inline constexpr WitnessKind kAllWitnessKinds[] = {WitnessKind::NilpCyc, WitnessKind::NilpSub,
                                                   WitnessKind::SuperCyc, WitnessKind::SuperSub,
                                                   WitnessKind::SolvSub};

struct Witness {
  Group group;
  std::uint64_t expected;
};

/// S3, A4 or A5 times cyclic groups of the smallest primes above 3 (above 5
/// for SolvSub). Throws Error(Domain) for t < 2, or t < 3 with SolvSub.
Witness sharpness_witness(std::uint32_t t, WitnessKind kind, const Caps& caps = {});

/// SHARP-<kind>: each witness attains its value and fails the property.
VerdictReport check_sharpness(WitnessKind kind, std::uint32_t t_min, std::uint32_t t_max,
                              const Caps& caps = {});

VerdictReport verify_involution_lemma(const std::vector<std::uint64_t>& q_list,
                                      const Caps& caps = {}); // LEM-2.8
VerdictReport verify_prime_inequalities(std::uint64_t q_max); // LEM-2.9
VerdictReport verify_eq31(std::uint64_t max_order, const Caps& caps = {}, unsigned jobs = 0); // EQ-3.1

/// Numeric claims quoted from the literature against computed values.
/// Discrepancies are violations; the report is informational.
VerdictReport errata_report(const Caps& caps = {});

/// ERRATA does not decide the exit status.
bool is_informational(const VerdictReport& r);

/// Every corpus check plus the stand-alone lemmas, sharpness witnesses and
/// errata, sorted by check_id.
std::vector<VerdictReport> run_verification(const CorpusConfig& cfg);

/// Corpus build and record failures as a CORPUS report.
VerdictReport corpus_error_report(const CorpusRecords& data);

} // namespace subcount

#endif // SUBCOUNT_VERIFIER_HPP
