#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "subcount/constructors.hpp"
#include "subcount/errors.hpp"
#include "subcount/numtheory.hpp"
#include "subcount/subgroups.hpp"
#include "subcount/verifier.hpp"

namespace subcount {

namespace {

std::string str(std::uint64_t v)
{
  return std::to_string(v);
}

std::string str(const ExactRational& r)
{
  return r.to_string();
}

ExactRational rat(std::uint64_t v)
{
  return ExactRational(static_cast<std::int64_t>(v));
}

void finalize(VerdictReport& r, std::uint64_t hypothesis_count, const std::string& extra = {})
{
  if (!r.violations.empty())
    r.status = Status::Fail;
  else
    r.status = hypothesis_count == 0 ? Status::Vacuous : Status::Pass;
  r.notes = "hypothesis held for " + str(hypothesis_count) + " of " + str(r.groups_checked);
  if (!extra.empty())
    r.notes += "; " + extra;
}

std::string flag(bool b)
{
  return b ? "true" : "false";
}

// "If Q(G) < c 2^(t+shift) then P(G)" over every record with t >= 1.
struct Threshold {
  const char* id;
  const char* quantity;
  std::int64_t coef;
  std::int64_t shift;
  const char* property;
  std::function<std::optional<std::uint64_t>(const InvariantRecord&)> value;
  std::function<std::optional<bool>(const InvariantRecord&)> holds;
  bool separate_prime_power = false;
};

std::string bound_formula(std::int64_t coef, std::int64_t shift)
{
  std::string e = "t";
  if (shift > 0)
    e += "+" + std::to_string(shift);
  else if (shift < 0)
    e += std::to_string(shift);
  return (coef == 1 ? "" : std::to_string(coef) + "*") + "2^(" + e + ")";
}

VerdictReport threshold_check(const CorpusRecords& data, const Threshold& th)
{
  VerdictReport r;
  r.check_id = th.id;
  std::uint64_t hyp = 0, no_value = 0, no_property = 0, prime_power = 0;
  for (auto const& rec : data.records) {
    if (rec.t == 0)
      continue;
    if (th.separate_prime_power && rec.t == 1) {
      ++prime_power;
      auto holds = th.holds(rec);
      if (holds && !*holds)
        r.violations.push_back({rec.name, std::string("prime-power order but ") + th.property + "=false"});
      continue;
    }
    auto v = th.value(rec);
    if (!v) {
      ++no_value;
      continue;
    }
    ++r.groups_checked;
    const ExactRational bound = scaled_power_of_two(th.coef, static_cast<std::int64_t>(rec.t) + th.shift);
    if (!(rat(*v) < bound))
      continue;
    ++hyp;
    auto holds = th.holds(rec);
    if (!holds) {
      ++no_property;
      continue;
    }
    if (!*holds)
      r.violations.push_back({rec.name, std::string(th.quantity) + "=" + str(*v) + " < " +
                                            bound_formula(th.coef, th.shift) + "=" + str(bound) +
                                            " (t=" + str(rec.t) + ") but " + th.property + "=false"});
  }
  std::string extra;
  if (th.separate_prime_power)
    extra += "t=1 reported separately: " + str(prime_power) + " prime-power groups checked for " +
             th.property;
  if (no_value)
    extra += (extra.empty() ? "" : "; ") + str(no_value) + " groups skipped (" + th.quantity +
             " unavailable)";
  if (no_property)
    extra += (extra.empty() ? "" : "; ") + str(no_property) + " hypothesis groups with " +
             th.property + " undecided";
  finalize(r, hyp, extra);
  return r;
}

std::optional<std::uint64_t> cyc_of(const InvariantRecord& r)
{
  return r.cyc;
}

std::optional<std::uint64_t> sub_of(const InvariantRecord& r)
{
  return r.sub;
}

std::optional<bool> nilpotent_of(const InvariantRecord& r)
{
  return r.nilpotent;
}

std::optional<bool> supersolvable_of(const InvariantRecord& r)
{
  return r.supersolvable;
}

std::optional<bool> solvable_of(const InvariantRecord& r)
{
  return r.solvable;
}

} // namespace

VerdictReport check_phi_sum(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "LEM-2.4";
  const std::size_t n = data.groups.size();
  std::vector<std::string> failure(n);
  detail::parallel_for(n, data.jobs, [&](std::size_t i) {
    auto const& g = *data.groups[i];
    if (g.order() == 1)
      return;
    try {
      auto a = cyc_by_phi_sum(g), b = cyc_by_enumeration(g);
      if (a != b)
        failure[i] = "sum 1/phi(o(g))=" + str(a) + " != enumerated cyc=" + str(b);
    } catch (const Error& e) {
      failure[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (!failure[i].empty())
      r.violations.push_back({data.groups[i]->name(), failure[i]});
  r.groups_checked = std::count_if(data.groups.begin(), data.groups.end(),
                                   [](auto const& g) { return g->order() > 1; });
  finalize(r, r.groups_checked);
  return r;
}

VerdictReport check_richards(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "THM-2.2";
  std::uint64_t equal = 0;
  for (auto const& rec : data.records) {
    if (rec.t == 0)
      continue;
    ++r.groups_checked;
    const auto d = divisor_count(rec.order);
    if (rec.cyc < d)
      r.violations.push_back({rec.name, "cyc=" + str(rec.cyc) + " < d(" + str(rec.order) + ")=" + str(d)});
    else if ((rec.cyc == d) != rec.is_cyclic)
      r.violations.push_back({rec.name, "cyc=" + str(rec.cyc) + (rec.cyc == d ? " == " : " != ") +
                                            "d(" + str(rec.order) + ")=" + str(d) +
                                            " but cyclic=" + flag(rec.is_cyclic)});
    if (rec.cyc == d)
      ++equal;
  }
  finalize(r, r.groups_checked, "equality (cyclic groups) in " + str(equal));
  return r;
}

VerdictReport check_product_inequality(const CorpusRecords& data, const CorpusConfig& cfg)
{
  VerdictReport r;
  r.check_id = "THM-2.3";
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& recs = data.records;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].order < 2)
      continue;
    for (std::size_t j = i; j < recs.size(); ++j) {
      if (recs[j].order < 2)
        continue;
      if (recs[i].order * recs[j].order > cfg.product_max_order)
        break; // sorted by order
      pairs.push_back({i, j});
    }
  }

  std::vector<std::string> failure(pairs.size());
  std::vector<char> coprime(pairs.size());
  detail::parallel_for(pairs.size(), cfg.jobs, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    try {
      Group prod = direct_product(*data.groups[i], *data.groups[j], cfg.caps);
      const auto c = cyc_by_enumeration(prod);
      const auto lhs = recs[i].cyc * recs[j].cyc;
      coprime[k] = std::gcd(recs[i].order, recs[j].order) == 1;
      if (c < lhs)
        failure[k] = "cyc(GxH)=" + str(c) + " < cyc(G)cyc(H)=" + str(recs[i].cyc) + "*" +
                     str(recs[j].cyc) + "=" + str(lhs);
      else if (coprime[k] && c != lhs)
        failure[k] = "coprime orders but cyc(GxH)=" + str(c) + " != cyc(G)cyc(H)=" + str(lhs);
    } catch (const Error& e) {
      failure[k] = e.what();
    }
  });

  std::uint64_t n_coprime = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    n_coprime += coprime[k];
    if (!failure[k].empty())
      r.violations.push_back({recs[pairs[k].first].name + " x " + recs[pairs[k].second].name, failure[k]});
  }
  r.groups_checked = pairs.size();
  finalize(r, pairs.size(),
           "pairs with |G||H| <= " + str(cfg.product_max_order) + ", " + str(n_coprime) +
               " coprime pairs checked for equality");
  return r;
}

VerdictReport check_strong_domination_cyc(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "LEM-2.5";
  std::uint64_t hyp = 0;
  const auto& recs = data.records;
  std::size_t lo = 0;
  while (lo < recs.size()) {
    std::size_t hi = lo;
    while (hi < recs.size() && recs[hi].order == recs[lo].order)
      ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      r.groups_checked += recs[i].order > 1;
      for (std::size_t j = lo; j < hi; ++j) {
        if (i == j || !strongly_dominates(recs[i].orders, recs[j].orders))
          continue;
        ++hyp;
        if (!dominates(recs[i].orders, recs[j].orders))
          r.violations.push_back({recs[i].name, "strongly dominates " + recs[j].name +
                                                    " but does not dominate it"});
        if (recs[i].cyc > recs[j].cyc)
          r.violations.push_back({recs[i].name, "strongly dominates " + recs[j].name + " but cyc " +
                                                    str(recs[i].cyc) + " > " + str(recs[j].cyc)});
      }
    }
    lo = hi;
  }
  finalize(r, hyp);
  r.notes = str(hyp) + " ordered same-order pairs with strong domination among " + str(r.groups_checked) + " groups";
  return r;
}

VerdictReport check_amiri(const CorpusRecords& data, const Caps& caps)
{
  VerdictReport r;
  r.check_id = "THM-2.6";
  struct Task {
    std::size_t rec;
    std::uint64_t p;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    auto const& rec = data.records[i];
    if (rec.t == 0)
      continue;
    ++r.groups_checked;
    for (auto const& s : rec.sylow)
      if (!s.cyclic && !s.generalized_quaternion)
        tasks.push_back({i, s.prime});
  }
  std::vector<std::string> failure(tasks.size());
  detail::parallel_for(tasks.size(), data.jobs, [&](std::size_t k) {
    auto const& rec = data.records[tasks[k].rec];
    const auto p = tasks[k].p;
    try {
      Group ref = direct_product(cyclic(rec.order / p, caps), cyclic(p, caps), caps);
      if (!strongly_dominates(order_sequence(ref), rec.orders))
        failure[k] = "Sylow " + str(p) + "-subgroup neither cyclic nor generalized quaternion, but os(" +
                     ref.name() + ") does not strongly dominate";
    } catch (const Error& e) {
      failure[k] = e.what();
    }
  });
  for (std::size_t k = 0; k < tasks.size(); ++k)
    if (!failure[k].empty())
      r.violations.push_back({data.records[tasks[k].rec].name, failure[k]});
  finalize(r, tasks.size());
  r.notes = str(tasks.size()) + " (group, prime) pairs with a Sylow subgroup neither cyclic nor generalized quaternion";
  return r;
}

VerdictReport check_extension_domination(const CorpusRecords& data, const Caps& caps)
{
  VerdictReport r;
  r.check_id = "THM-2.7";
  std::uint64_t hyp = 0, non_coprime = 0;
  for (auto const& rec : data.records) {
    if (!rec.semidirect)
      continue;
    ++r.groups_checked;
    auto const& sd = *rec.semidirect;
    if (!sd.coprime()) {
      ++non_coprime;
      continue;
    }
    ++hyp;
    try {
      Group ref = direct_product(cyclic(sd.a, caps), cyclic(sd.b, caps), caps);
      if (!strongly_dominates(order_sequence(ref), rec.orders))
        r.violations.push_back({rec.name, "os(" + ref.name() + ") does not strongly dominate os(K)"});
      const auto c = cyc_by_enumeration(ref);
      if (c > rec.cyc)
        r.violations.push_back({rec.name, "cyc(" + ref.name() + ")=" + str(c) + " > cyc(K)=" + str(rec.cyc)});
    } catch (const Error& e) {
      r.violations.push_back({rec.name, e.what()});
    }
  }
  finalize(r, hyp, "semidirect groups with coprime factors; " + str(non_coprime) + " non-coprime skipped");
  return r;
}

VerdictReport check_semidirect_subgroups(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "LEM-HL";
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    auto const& rec = data.records[i];
    if (!rec.semidirect)
      continue;
    ++r.groups_checked;
    auto const& g = *data.groups[i];
    const auto a = rec.semidirect->a, b = rec.semidirect->b;
    if (a < 2)
      continue;
    // element x*b + y is (x, y); (1, 0) generates the normal factor, (0, 1) the complement
    const Element n_gen = static_cast<Element>(b);
    const SubgroupSet h = generate_subgroup(g, std::span<const Element>(&n_gen, 1));
    std::vector<SubgroupSet> seen;
    for (auto e : divisors(b)) {
      const Element l_gen = static_cast<Element>(b / e % b);
      const SubgroupSet l = generate_subgroup(g, std::span<const Element>(&l_gen, 1));
      ElementSet product(g.order());
      h.members.for_each([&](Element x) { l.members.for_each([&](Element y) { product.insert(g.mul(x, y)); }); });
      const SubgroupSet hl = join(g, h, l_gen);
      std::string detail;
      if (h.members.size() != a || l.members.size() != e)
        detail = "factor sizes " + str(h.members.size()) + ", " + str(l.members.size()) +
                 " differ from " + str(a) + ", " + str(e);
      else if (!(product == hl.members))
        detail = "HL with |L|=" + str(e) + " is not a subgroup";
      else if (std::any_of(seen.begin(), seen.end(), [&](const SubgroupSet& s) { return s.members == hl.members; }))
        detail = "HL with |L|=" + str(e) + " repeats an earlier subgroup";
      if (!detail.empty()) {
        r.violations.push_back({rec.name, detail});
        break;
      }
      seen.push_back(hl);
    }
  }
  finalize(r, r.groups_checked, "subgroups HL for every L of the cyclic complement");
  return r;
}

VerdictReport check_nilpotency_cyc(const CorpusRecords& data)
{
  return threshold_check(data, {"THM-3.1", "cyc", 5, -2, "nilpotent", cyc_of, nilpotent_of, true});
}

VerdictReport check_nilpotency_sub(const CorpusRecords& data)
{
  return threshold_check(data, {"THM-3.2", "sub", 6, -2, "nilpotent", sub_of, nilpotent_of, true});
}

VerdictReport check_noncyclic_bounds(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "REM-3.4";
  std::uint64_t no_sub = 0;
  for (auto const& rec : data.records) {
    if (rec.t == 0 || rec.is_cyclic)
      continue;
    ++r.groups_checked;
    const auto t = static_cast<std::int64_t>(rec.t);
    const auto cyc_bound = scaled_power_of_two(5, t - 2), sub_bound = scaled_power_of_two(6, t - 2);
    if (rat(rec.cyc) < cyc_bound)
      r.violations.push_back({rec.name, "non-cyclic but cyc=" + str(rec.cyc) + " < 5*2^(t-2)=" +
                                            str(cyc_bound) + " (t=" + str(rec.t) + ")"});
    if (!rec.sub)
      ++no_sub;
    else if (rat(*rec.sub) < sub_bound)
      r.violations.push_back({rec.name, "non-cyclic but sub=" + str(*rec.sub) + " < 6*2^(t-2)=" +
                                            str(sub_bound) + " (t=" + str(rec.t) + ")"});
  }
  finalize(r, r.groups_checked,
           "non-cyclic groups; sub bound skipped for " + str(no_sub) + " without sub");
  return r;
}

VerdictReport check_supersolvable_divisor_criterion(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "THM-4.1";
  std::uint64_t hyp = 0, undecided = 0, gq = 0;
  for (auto const& rec : data.records) {
    if (rec.t == 0)
      continue;
    ExactRational factor;
    bool any = false;
    for (auto const& s : rec.sylow) {
      if (s.exponent < 2)
        continue;
      ExactRational f(2 * static_cast<std::int64_t>(s.exponent), static_cast<std::int64_t>(s.exponent) + 1);
      if (!any || f < factor)
        factor = f;
      any = true;
    }
    if (!any)
      continue;
    if (rec.has_generalized_quaternion_sylow()) {
      ++gq;
      continue;
    }
    ++r.groups_checked;
    const auto bound = rat(divisor_count(rec.order)) * factor;
    if (!(rat(rec.cyc) < bound))
      continue;
    ++hyp;
    if (!rec.supersolvable) {
      ++undecided;
      continue;
    }
    if (!*rec.supersolvable)
      r.violations.push_back({rec.name, "cyc=" + str(rec.cyc) + " < d(" + str(rec.order) +
                                            ")*min 2r/(r+1)=" + str(bound) +
                                            " but supersolvable=false"});
  }
  finalize(r, hyp,
           "orders with a repeated prime and no generalized quaternion Sylow; " + str(gq) +
               " excluded for a generalized quaternion Sylow" +
               (undecided ? "; " + str(undecided) + " undecided" : std::string()));
  return r;
}

VerdictReport check_supersolvable_cyc(const CorpusRecords& data)
{
  return threshold_check(data, {"THM-4.2", "cyc", 1, 1, "supersolvable", cyc_of, supersolvable_of});
}

VerdictReport check_supersolvable_sub(const CorpusRecords& data)
{
  return threshold_check(data, {"THM-4.5", "sub", 5, -1, "supersolvable", sub_of, supersolvable_of});
}

VerdictReport check_solvable_sub(const CorpusRecords& data)
{
  return threshold_check(data, {"THM-5.3", "sub", 59, -3, "solvable", sub_of, solvable_of});
}

VerdictReport scan_conjecture(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "CONJ-5.4";
  std::uint64_t non_solvable = 0;
  std::vector<std::string> near;
  for (auto const& rec : data.records) {
    if (rec.t == 0)
      continue;
    ++r.groups_checked;
    if (rec.solvable)
      continue;
    ++non_solvable;
    const auto bound = scaled_power_of_two(1, static_cast<std::int64_t>(rec.t) + 2);
    if (rat(rec.cyc) < bound)
      r.violations.push_back({rec.name, "cyc=" + str(rec.cyc) + " < 2^(t+2)=" + str(bound) +
                                            " (t=" + str(rec.t) + ") but solvable=false"});
    else if (rat(rec.cyc) == bound)
      near.push_back(rec.name + " cyc=" + str(rec.cyc) + "=2^(" + str(rec.t) + "+2)");
  }
  if (!r.violations.empty())
    r.status = Status::Fail;
  else
    r.status = r.groups_checked == 0 ? Status::Vacuous : Status::Pass;
  r.notes = str(non_solvable) + " non-solvable groups scanned";
  if (non_solvable == 0 && r.groups_checked > 0)
    r.notes += " (corpus is all solvable)";
  r.notes += "; near-misses: ";
  if (near.empty())
    r.notes += "none";
  for (std::size_t i = 0; i < near.size(); ++i)
    r.notes += (i ? ", " : "") + near[i];
  return r;
}

} // namespace subcount
