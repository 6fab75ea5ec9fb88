#include <algorithm>
#include <functional>
#include <set>

#include "parallel.hpp"
#include "subcount/classify.hpp"
#include "subcount/constructors.hpp"
#include "subcount/errors.hpp"
#include "subcount/group_spec.hpp"
#include "subcount/numtheory.hpp"
#include "subcount/verifier.hpp"

namespace subcount {

namespace {

std::string str(std::uint64_t v)
{
  return std::to_string(v);
}

void finalize(VerdictReport& r, std::uint64_t hypothesis_count)
{
  if (!r.violations.empty())
    r.status = Status::Fail;
  else
    r.status = hypothesis_count == 0 ? Status::Vacuous : Status::Pass;
}

std::vector<std::uint64_t> primes_above(std::uint64_t floor, std::size_t count)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = floor + 1; out.size() < count; ++p)
    if (is_prime(p))
      out.push_back(p);
  return out;
}

struct KindInfo {
  WitnessKind kind;
  const char* name;
  const char* base;
  std::uint64_t prime_floor;
  std::uint32_t base_t;
  bool uses_sub;
  std::int64_t coef;
  std::int64_t shift;
  const char* property;
};

constexpr KindInfo kKinds[] = {
    {WitnessKind::NilpCyc, "NILP_CYC", "S(3)", 3, 2, false, 5, -2, "nilpotent"},
    {WitnessKind::NilpSub, "NILP_SUB", "S(3)", 3, 2, true, 6, -2, "nilpotent"},
    {WitnessKind::SuperCyc, "SUPER_CYC", "A(4)", 3, 2, false, 1, 1, "supersolvable"},
    {WitnessKind::SuperSub, "SUPER_SUB", "A(4)", 3, 2, true, 5, -1, "supersolvable"},
    {WitnessKind::SolvSub, "SOLV_SUB", "A(5)", 5, 3, true, 59, -3, "solvable"},
};

const KindInfo& info(WitnessKind kind)
{
  for (auto const& k : kKinds)
    if (k.kind == kind)
      return k;
  return kKinds[0];
}

std::string witness_spec(const KindInfo& k, std::uint32_t t)
{
  std::string spec = k.base;
  for (auto p : primes_above(k.prime_floor, t - k.base_t))
    spec += " x Z(" + str(p) + ")";
  return spec;
}

std::uint64_t expected_value(const KindInfo& k, std::uint32_t t)
{
  const auto e = static_cast<std::int64_t>(t) + k.shift;
  const auto v = scaled_power_of_two(k.coef, e);
  return static_cast<std::uint64_t>(v.numerator());
}

bool property_holds(const KindInfo& k, const Group& g, const Caps& caps)
{
  switch (k.kind) {
  case WitnessKind::NilpCyc:
  case WitnessKind::NilpSub: return is_nilpotent(g);
  case WitnessKind::SuperCyc:
  case WitnessKind::SuperSub: return is_supersolvable(g, caps);
  case WitnessKind::SolvSub: return is_solvable(g);
  }
  return false;
}

} // namespace

const char* witness_kind_name(WitnessKind kind) noexcept
{
  return info(kind).name;
}

std::optional<WitnessKind> parse_witness_kind(std::string_view text) noexcept
{
  for (auto const& k : kKinds)
    if (text == k.name)
      return k.kind;
  return std::nullopt;
}

Witness sharpness_witness(std::uint32_t t, WitnessKind kind, const Caps& caps)
{
  auto const& k = info(kind);
  if (t < k.base_t)
    throw Error(ErrorCode::Domain, std::string(k.name) + " witnesses need t >= " + str(k.base_t));
  return {build_group_spec(witness_spec(k, t), caps), expected_value(k, t)};
}

VerdictReport check_sharpness(WitnessKind kind, std::uint32_t t_min, std::uint32_t t_max, const Caps& caps)
{
  auto const& k = info(kind);
  VerdictReport r;
  r.check_id = std::string("SHARP-") + k.name;
  std::string attained;
  for (std::uint32_t t = std::max(t_min, k.base_t); t <= t_max; ++t) {
    ++r.groups_checked;
    try {
      Witness w = sharpness_witness(t, kind, caps);
      const std::uint64_t value = k.uses_sub ? sub_count(w.group, caps) : cyc_by_enumeration(w.group);
      const char* q = k.uses_sub ? "sub" : "cyc";
      if (value != w.expected)
        r.violations.push_back({w.group.name(), std::string(q) + "=" + str(value) + " != expected " +
                                                    str(w.expected) + " (t=" + str(t) + ")"});
      if (property_holds(k, w.group, caps))
        r.violations.push_back({w.group.name(), std::string(k.property) + "=true at the witness"});
      if (distinct_prime_count(w.group.order()) != t)
        r.violations.push_back({w.group.name(), "order has " + str(distinct_prime_count(w.group.order())) +
                                                    " prime divisors, expected " + str(t)});
      attained += (attained.empty() ? "" : "; ") + w.group.name() + " " + q + "=" + str(value);
    } catch (const Error& e) {
      r.violations.push_back({witness_spec(k, t), e.what()});
    }
  }
  finalize(r, r.groups_checked);
  r.notes = attained.empty() ? "no t in range" : attained;
  if (kind == WitnessKind::SuperSub)
    r.notes += "; published witness figure 5*2^(t-2) differs, see ERRATA";
  return r;
}

VerdictReport verify_involution_lemma(const std::vector<std::uint64_t>& q_list, const Caps& caps)
{
  VerdictReport r;
  r.check_id = "LEM-2.8";
  std::string seen;
  for (auto q : q_list) {
    ++r.groups_checked;
    const std::string name = "PSL(2," + str(q) + ")";
    try {
      const auto expected = psl2_involution_formula(q);
      const auto count = involution_count(psl2(q, caps));
      if (count != expected)
        r.violations.push_back({name, "involutions=" + str(count) + " != formula " + str(expected)});
      seen += (seen.empty() ? "" : ", ") + name + "=" + str(count);
    } catch (const Error& e) {
      r.violations.push_back({name, e.what()});
    }
  }
  finalize(r, r.groups_checked);
  r.notes = "involution counts: " + (seen.empty() ? std::string("none") : seen);
  return r;
}

VerdictReport verify_prime_inequalities(std::uint64_t q_max)
{
  VerdictReport r;
  r.check_id = "LEM-2.9";
  std::uint64_t first = 0, second = 0;
  std::string small_t;
  for (std::uint64_t q = 3; q <= q_max; q += 2) {
    if (!prime_power_decompose(q))
      continue;
    ++r.groups_checked;
    const std::uint64_t n = q * (q + 1) * (q - 1) / 2;
    const std::uint32_t t = distinct_prime_count(n);
    const std::uint64_t lhs = q * (q - 1);
    const std::string name = "q=" + str(q);
    if (t < 3) {
      if (q >= 5)
        r.violations.push_back({name, "N=" + str(n) + " has t=" + str(t) + " < 3"});
      else
        small_t += (small_t.empty() ? "" : ", ") + name + " (N=" + str(n) + ", t=" + str(t) + ")";
    }
    if (q >= 7) {
      ++first;
      const auto rhs = 5 * (std::uint64_t{1} << t);
      if (lhs < rhs)
        r.violations.push_back({name, "q(q-1)=" + str(lhs) + " < 5*2^t=" + str(rhs) + " (t=" + str(t) + ")"});
    }
    if (q >= 37) {
      ++second;
      const auto rhs = 59 * (std::uint64_t{1} << (t - 1));
      if (lhs < rhs)
        r.violations.push_back({name, "q(q-1)=" + str(lhs) + " < 59*2^(t-1)=" + str(rhs) + " (t=" + str(t) + ")"});
    }
  }
  finalize(r, first);
  r.notes = "odd prime powers q <= " + str(q_max) + "; first inequality at " + str(first) +
            " values (q >= 7), second at " + str(second) + " (q >= 37); t >= 3 asserted for q >= 5";
  if (!small_t.empty())
    r.notes += "; t < 3 at " + small_t;
  return r;
}

VerdictReport verify_eq31(std::uint64_t max_order, const Caps& caps, unsigned jobs)
{
  VerdictReport r;
  r.check_id = "EQ-3.1";
  std::vector<SemidirectSpec> instances;
  for (std::uint64_t p = 3; 2 * p <= max_order; ++p) {
    if (!is_prime(p))
      continue;
    for (std::uint64_t m = 2; p * m <= max_order; ++m) {
      if (!is_squarefree(m))
        continue;
      auto f = factorize(m);
      if (f.back().prime >= p)
        continue;
      for (std::uint64_t rr = 2; rr < p; ++rr)
        if (pow_mod(rr, m, p) == 1)
          instances.push_back({p, m, rr});
    }
  }

  std::vector<std::string> failure(instances.size());
  detail::parallel_for(instances.size(), jobs, [&](std::size_t i) {
    auto const& sd = instances[i];
    try {
      const std::uint32_t t = 1 + distinct_prime_count(sd.b);
      const std::uint32_t pi_k = distinct_prime_count(multiplicative_order(sd.r, sd.a));
      const auto predicted = predicted_cyc_semidirect(sd.a, t, pi_k);
      const auto computed = cyc_by_enumeration(semidirect_cyclic(sd, caps));
      if (computed != predicted)
        failure[i] = "cyc=" + str(computed) + " != closed form " + str(predicted) + " (t=" + str(t) +
                     ", pi(k)=" + str(pi_k) + ")";
      else if (2 * computed < 5 * (std::uint64_t{1} << (t - 1)))
        failure[i] = "cyc/2^(t-1)=" + str(computed) + "/" + str(std::uint64_t{1} << (t - 1)) + " < 5/2";
    } catch (const Error& e) {
      failure[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < instances.size(); ++i)
    if (!failure[i].empty())
      r.violations.push_back({instances[i].to_string(), failure[i]});
  r.groups_checked = instances.size();
  finalize(r, instances.size());
  r.notes = "SD(p,m,r) with p the largest prime, m squarefree, r of order k > 1, pm <= " + str(max_order) +
            "; ratio cyc/2^(t-1) >= 5/2 also checked";
  return r;
}

namespace {

struct Claim {
  std::string group;
  std::string text;
  std::function<std::pair<bool, std::string>()> evaluate; // agrees, computed values
};

std::uint64_t sub_of(const std::string& spec, const Caps& caps)
{
  return sub_count(build_group_spec(spec, caps), caps);
}

std::uint64_t cyc_of(const std::string& spec, const Caps& caps)
{
  return cyc_by_enumeration(build_group_spec(spec, caps));
}

Claim count_claim(const std::string& spec, bool sub, std::uint64_t published, const Caps& caps)
{
  const char* q = sub ? "subgroups" : "cyclic subgroups";
  return {spec, spec + " has " + str(published) + " " + q, [=] {
            const auto v = sub ? sub_of(spec, caps) : cyc_of(spec, caps);
            return std::pair{v == published, std::string(sub ? "sub=" : "cyc=") + str(v)};
          }};
}

// Witness family claim over t in [t_lo, t_hi] with the published formula.
Claim family_claim(WitnessKind kind, std::uint32_t t_lo, std::uint32_t t_hi, std::int64_t coef,
                   std::int64_t shift, const std::string& formula, const Caps& caps)
{
  auto const& k = info(kind);
  std::string label = std::string(k.base) + " x prod Z(p_i)";
  return {label, label + " has exactly " + formula + (k.uses_sub ? " subgroups" : " cyclic subgroups") +
                     " for t=" + str(t_lo) + ".." + str(t_hi),
          [=] {
            bool agrees = true;
            std::string computed;
            for (auto t = t_lo; t <= t_hi; ++t) {
              const auto spec = witness_spec(k, t);
              const auto v = k.uses_sub ? sub_of(spec, caps) : cyc_of(spec, caps);
              const auto published = scaled_power_of_two(coef, static_cast<std::int64_t>(t) + shift);
              agrees = agrees && ExactRational(static_cast<std::int64_t>(v)) == published;
              computed += (computed.empty() ? "" : ", ") + spec + ": " + (k.uses_sub ? "sub=" : "cyc=") +
                          str(v) + " vs " + published.to_string();
            }
            return std::pair{agrees, computed};
          }};
}

} // namespace

VerdictReport errata_report(const Caps& caps)
{
  std::vector<Claim> claims{
      count_claim("S(3)", false, 5, caps),
      count_claim("S(3)", true, 6, caps),
      count_claim("A(4)", false, 8, caps),
      count_claim("A(4)", true, 10, caps),
      count_claim("A(5)", true, 59, caps),
      {"PSL(2,3), PSL(2,5)", "PSL(2,3) has 10 and PSL(2,5) has 59 cyclic subgroups",
       [caps] {
         const auto c3 = cyc_of("PSL(2,3)", caps), c5 = cyc_of("PSL(2,5)", caps);
         const auto s3 = sub_of("PSL(2,3)", caps), s5 = sub_of("PSL(2,5)", caps);
         return std::pair{c3 == 10 && c5 == 59, "cyc=" + str(c3) + ", " + str(c5) + "; sub=" + str(s3) +
                                                     ", " + str(s5)};
       }},
      family_claim(WitnessKind::NilpCyc, 3, 4, 5, -2, "5*2^(t-2)", caps),
      family_claim(WitnessKind::SuperCyc, 3, 4, 1, 1, "2^(t+1)", caps),
      family_claim(WitnessKind::SuperSub, 3, 4, 5, -2, "5*2^(t-2)", caps),
      family_claim(WitnessKind::SolvSub, 4, 4, 59, -3, "59*2^(t-3)", caps),
  };

  VerdictReport r;
  r.check_id = "ERRATA";
  std::string agreements;
  for (auto const& c : claims) {
    ++r.groups_checked;
    try {
      auto [agrees, computed] = c.evaluate();
      if (agrees)
        agreements += (agreements.empty() ? "" : "; ") + c.text;
      else
        r.violations.push_back({c.group, "published: " + c.text + "; computed: " + computed});
    } catch (const Error& e) {
      r.violations.push_back({c.group, std::string("could not evaluate: ") + e.what()});
    }
  }
  finalize(r, r.groups_checked);
  r.notes = "informational, excluded from the exit status; agreements: " + agreements +
            "; the A(5) family is taken with t-3 primes above 5 so that pi(G)=t";
  return r;
}

bool is_informational(const VerdictReport& r)
{
  return r.check_id == "ERRATA";
}

std::vector<VerdictReport> run_verification(const CorpusConfig& cfg)
{
  const CorpusRecords data = compute_records(build_corpus(cfg), cfg.caps, cfg.jobs);
  std::vector<VerdictReport> out;
  if (!data.errors.empty())
    out.push_back(corpus_error_report(data));
  out.push_back(check_phi_sum(data));
  out.push_back(check_richards(data));
  out.push_back(check_product_inequality(data, cfg));
  out.push_back(check_strong_domination_cyc(data));
  out.push_back(check_amiri(data, cfg.caps));
  out.push_back(check_extension_domination(data, cfg.caps));
  out.push_back(check_semidirect_subgroups(data));
  out.push_back(check_nilpotency_cyc(data));
  out.push_back(check_nilpotency_sub(data));
  out.push_back(check_noncyclic_bounds(data));
  out.push_back(check_supersolvable_divisor_criterion(data));
  out.push_back(check_supersolvable_cyc(data));
  out.push_back(check_supersolvable_sub(data));
  out.push_back(check_solvable_sub(data));
  out.push_back(scan_conjecture(data));
  for (auto kind : kAllWitnessKinds)
    out.push_back(check_sharpness(kind, cfg.witness_t_min, cfg.witness_t_max, cfg.caps));
  out.push_back(verify_involution_lemma(cfg.involution_q, cfg.caps));
  out.push_back(verify_prime_inequalities(cfg.lemma29_q_max));
  out.push_back(verify_eq31(cfg.eq31_max_order, cfg.caps, cfg.jobs));
  out.push_back(errata_report(cfg.caps));
  std::sort(out.begin(), out.end(),
            [](const VerdictReport& a, const VerdictReport& b) { return a.check_id < b.check_id; });
  return out;
}

} // namespace subcount
