// Structural properties checked over every corpus group. Shared by the unit
// tests and the acceptance gate.
#ifndef SUBCOUNT_TESTS_PROPERTIES_HPP
#define SUBCOUNT_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "subcount/classify.hpp"
#include "subcount/constructors.hpp"
#include "subcount/errors.hpp"
#include "subcount/invariants.hpp"
#include "subcount/numtheory.hpp"
#include "subcount/subgroups.hpp"
#include "subcount/verifier.hpp"

namespace props {

using namespace subcount;

struct Tally {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checked > 0; }
};

inline void fail(Tally& t, const std::string& group, const std::string& what)
{
  if (t.failures.size() < 20)
    t.failures.push_back(group + ": " + what);
  else if (t.failures.size() == 20)
    t.failures.push_back("...");
}

// H equals the closure of its own generators.
inline bool is_generated_by_own_generators(const Group& g, const SubgroupSet& h)
{
  ElementSet seen(g.order());
  std::vector<Element> frontier{Group::identity()};
  seen.insert(Group::identity());
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : h.generators) {
      Element y = g.mul(x, s);
      if (seen.insert(y))
        frontier.push_back(y);
    }
  }
  return seen == h.members;
}

// Every pair when the lattice is small, a fixed pseudo-random sample otherwise.
template<typename F>
void for_pairs(std::size_t n, F&& f)
{
  constexpr std::size_t kFull = 400;
  constexpr std::size_t kSamples = 40000;
  if (n <= kFull) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        f(i, j);
    return;
  }
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < kSamples; ++k)
    f(pick(rng), pick(rng));
}

inline void lattice_properties(const Group& g, const InvariantRecord& rec, const Caps& caps,
                               Tally& closure, Tally& lagrange)
{
  if (!rec.sub)
    return;
  SubgroupLattice lat = all_subgroups(g, caps);
  const auto& es = lat.entries();
  ++closure.checked;
  ++lagrange.checked;
  if (lat.size() != *rec.sub)
    fail(closure, g.name(), "lattice size " + std::to_string(lat.size()) + " vs sub " + std::to_string(*rec.sub));
  if (lat.find(trivial_subgroup(g).members) == lat.size() || lat.find(whole_group(g).members) == lat.size())
    fail(closure, g.name(), "trivial or whole group missing");
  std::uint64_t cyclic = 0;
  for (auto const& e : es) {
    cyclic += e.is_cyclic;
    if (g.order() % e.subgroup.size() != 0)
      fail(lagrange, g.name(), "subgroup of order " + std::to_string(e.subgroup.size()));
    if (!is_generated_by_own_generators(g, e.subgroup))
      fail(closure, g.name(), "entry not closed under its generators");
  }
  if (cyclic != rec.cyc)
    fail(closure, g.name(), "cyclic entries " + std::to_string(cyclic) + " vs cyc " + std::to_string(rec.cyc));
  for_pairs(es.size(), [&](std::size_t i, std::size_t j) {
    const auto& a = es[i].subgroup;
    const auto& b = es[j].subgroup;
    ElementSet meet = a.members.intersection(b.members);
    if (lat.find(meet) == lat.size())
      fail(closure, g.name(), "intersection missing");
    if (a.size() % meet.size() != 0)
      fail(lagrange, g.name(), "intersection order does not divide");
    std::vector<Element> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    if (lat.find(generate_subgroup(g, gens).members) == lat.size())
      fail(closure, g.name(), "join missing");
  });
}

inline void classifier_chain(const Group& g, const InvariantRecord& rec, Tally& chain)
{
  ++chain.checked;
  if (rec.is_cyclic && !g.is_abelian())
    fail(chain, g.name(), "cyclic but not abelian");
  if (g.is_abelian() && !rec.nilpotent)
    fail(chain, g.name(), "abelian but not nilpotent");
  if (rec.nilpotent && rec.supersolvable == false)
    fail(chain, g.name(), "nilpotent but not supersolvable");
  if (rec.supersolvable == true && !rec.solvable)
    fail(chain, g.name(), "supersolvable but not solvable");
  if (rec.is_cyclic && (rec.cyc != divisor_count(rec.order)))
    fail(chain, g.name(), "cyclic with cyc != d(n)");
}

// Pairs of equal order: strong domination forces cyc(G) <= cyc(H).
inline void domination_pairs(const CorpusRecords& data, Tally& dom)
{
  std::map<std::uint64_t, std::vector<std::size_t>> by_order;
  for (std::size_t i = 0; i < data.records.size(); ++i)
    by_order[data.records[i].order].push_back(i);
  for (auto const& [order, idx] : by_order) {
    for (std::size_t i : idx) {
      ++dom.checked;
      for (std::size_t j : idx) {
        auto const& a = data.records[i];
        auto const& b = data.records[j];
        if (strongly_dominates(a.orders, b.orders) && a.cyc > b.cyc)
          fail(dom, a.name + " vs " + b.name,
               "strongly dominates but cyc " + std::to_string(a.cyc) + " > " + std::to_string(b.cyc));
      }
    }
  }
}

inline std::uint64_t smallest_prime_not_dividing(std::uint64_t n)
{
  for (std::uint64_t p = 2;; ++p)
    if (is_prime(p) && n % p != 0)
      return p;
}

// G x Z_p for the smallest prime p coprime to |G|: cyc and sub double.
inline void coprime_multiplicativity(const Group& g, const InvariantRecord& rec, const Caps& caps,
                                     std::uint64_t sub_max_order, Tally& mult)
{
  const std::uint64_t p = smallest_prime_not_dividing(g.order());
  Group k = direct_product(g, cyclic(p, caps), caps);
  ++mult.checked;
  auto ck = cyc_by_phi_sum(k);
  if (ck != 2 * rec.cyc)
    fail(mult, k.name(), "cyc " + std::to_string(ck) + " vs 2*" + std::to_string(rec.cyc));
  if (rec.sub && k.order() <= sub_max_order) {
    auto sk = sub_count(k, caps);
    if (sk != 2 * *rec.sub)
      fail(mult, k.name(), "sub " + std::to_string(sk) + " vs 2*" + std::to_string(*rec.sub));
  }
}

inline std::vector<Tally> run_suite(const CorpusRecords& data, const Caps& caps,
                                    std::uint64_t sub_product_max_order)
{
  Tally closure{"lattice-closure"}, lagrange{"lagrange"}, chain{"classifier-chain"},
      dom{"strong-domination-cyc"}, mult{"coprime-multiplicativity"};
  for (std::size_t i = 0; i < data.groups.size(); ++i) {
    const Group& g = *data.groups[i];
    const InvariantRecord& rec = data.records[i];
    try {
      lattice_properties(g, rec, caps, closure, lagrange);
      classifier_chain(g, rec, chain);
      coprime_multiplicativity(g, rec, caps, sub_product_max_order, mult);
    } catch (const std::exception& e) {
      fail(closure, g.name(), e.what());
    }
  }
  domination_pairs(data, dom);
  return {closure, lagrange, chain, dom, mult};
}

} // namespace props

#endif // SUBCOUNT_TESTS_PROPERTIES_HPP
