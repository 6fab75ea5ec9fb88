#include "subcount/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "subcount/errors.hpp"
#include "subcount/numtheory.hpp"

namespace subcount {

SubgroupSet trivial_subgroup(const Group& g)
{
  SubgroupSet h{ElementSet(g.order()), {}};
  h.members.insert(Group::identity());
  return h;
}

SubgroupSet whole_group(const Group& g)
{
  SubgroupSet h{ElementSet(g.order()), g.generators()};
  for (Element e = 0; e < g.order(); ++e)
    h.members.insert(e);
  return h;
}

SubgroupSet join(const Group& g, const SubgroupSet& h, Element x)
{
  if (h.contains(x))
    return h;

  SubgroupSet out{h.members, h.generators};
  out.generators.push_back(x);
  const std::vector<Element> base = h.members.members();

  // union of right cosets H*rep, closed under right multiplication by generators
  std::vector<Element> reps{Group::identity()};
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    for (auto s : out.generators) {
      Element y = g.mul(reps[ri], s);
      if (out.members.contains(y))
        continue;
      reps.push_back(y);
      for (auto hm : base)
        out.members.insert(g.mul(hm, y));
    }
  }
  return out;
}

SubgroupSet generate_subgroup(const Group& g, std::span<const Element> generators)
{
  SubgroupSet h = trivial_subgroup(g);
  for (auto x : generators)
    if (!h.contains(x))
      h = join(g, h, x);
  return h;
}

SubgroupSet normal_closure(const Group& g, std::span<const Element> seeds,
                           std::span<const Element> within)
{
  SubgroupSet k = generate_subgroup(g, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < k.generators.size(); ++i) {
      for (auto w : within) {
        Element c = g.conjugate(k.generators[i], w);
        if (!k.contains(c)) {
          k = join(g, k, c);
          changed = true;
        }
      }
    }
  }
  return k;
}

std::vector<SubgroupSet> cyclic_subgroups(const Group& g)
{
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<SubgroupSet> out;
  for (Element x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    const std::uint64_t o = g.element_order(x);
    SubgroupSet c{ElementSet(n), {}};
    if (x != Group::identity())
      c.generators.push_back(x);
    Element p = Group::identity();
    for (std::uint64_t k = 0; k < o; ++k) {
      c.members.insert(p);
      if (std::gcd(k, o) == 1)
        seen[p] = 1; // p generates the same subgroup
      p = g.mul(p, x);
    }
    seen[x] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

bool is_normal(const SubgroupSet& h, const Group& g)
{
  for (auto w : g.generators())
    for (auto x : h.generators)
      if (!h.contains(g.conjugate(x, w)))
        return false;
  return true;
}

bool is_cyclic(const SubgroupSet& h, const Group& g)
{
  bool found = false;
  h.members.for_each([&](Element e) {
    if (g.element_order(e) == h.size())
      found = true;
  });
  return found;
}

namespace {

bool canonical_less(const ElementSet& a, const ElementSet& b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  return a.lex_less_same_size(b);
}

} // namespace

std::size_t SubgroupLattice::find(const ElementSet& members) const
{
  auto it = std::lower_bound(entries_.begin(), entries_.end(), members,
                             [](const LatticeEntry& e, const ElementSet& m) {
                               return canonical_less(e.subgroup.members, m);
                             });
  if (it != entries_.end() && it->subgroup.members == members)
    return static_cast<std::size_t>(it - entries_.begin());
  return entries_.size();
}

SubgroupLattice all_subgroups(const Group& g, const Caps& caps)
{
  const std::size_t n = g.order();
  if (n > caps.lattice)
    throw LatticeCapExceeded(0, g.name() + ": order " + std::to_string(n) +
                                    " exceeds lattice cap " + std::to_string(caps.lattice));

  std::vector<SubgroupSet> subs = cyclic_subgroups(g);
  const std::size_t cyclic_count = subs.size();

  // every subgroup is the join of its cyclic subgroups of prime-power order
  std::vector<Element> atoms;
  for (auto const& c : subs)
    if (c.size() > 1 && prime_power_decompose(c.size()))
      atoms.push_back(c.generators.front());

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  index.reserve(subs.size() * 4);
  for (std::size_t i = 0; i < subs.size(); ++i)
    index.emplace(subs[i].members, i);

  std::vector<char> maximal;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    bool every_join_is_whole = true;
    for (auto a : atoms) {
      if (subs[i].contains(a))
        continue;
      SubgroupSet j = join(g, subs[i], a);
      if (j.size() != n)
        every_join_is_whole = false;
      if (index.find(j.members) != index.end())
        continue;
      if (subs.size() >= caps.subgroup_count)
        throw LatticeCapExceeded(subs.size(), g.name() + ": more than " +
                                                  std::to_string(caps.subgroup_count) + " subgroups");
      index.emplace(j.members, subs.size());
      subs.push_back(std::move(j));
    }
    maximal.push_back(subs[i].size() != n && every_join_is_whole);
  }

  std::vector<LatticeEntry> entries;
  entries.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    LatticeEntry e;
    e.is_cyclic = i < cyclic_count;
    e.is_maximal = maximal[i] != 0;
    e.is_normal = is_normal(subs[i], g);
    e.subgroup = std::move(subs[i]);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
    return canonical_less(a.subgroup.members, b.subgroup.members);
  });
  return SubgroupLattice(n, std::move(entries));
}

std::vector<SubgroupSet> maximal_subgroups(const SubgroupLattice& lattice)
{
  std::vector<SubgroupSet> out;
  for (auto const& e : lattice.entries())
    if (e.is_maximal)
      out.push_back(e.subgroup);
  return out;
}

} // namespace subcount
