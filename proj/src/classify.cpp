#include "subcount/classify.hpp"

#include <algorithm>

#include "subcount/errors.hpp"
#include "subcount/numtheory.hpp"

namespace subcount {

bool is_solvable(const Group& g)
{
  SubgroupSet h = whole_group(g);
  while (h.size() > 1) {
    std::vector<Element> seeds;
    for (auto a : h.generators)
      for (auto b : h.generators)
        seeds.push_back(g.commutator(a, b));
    SubgroupSet d = normal_closure(g, seeds, h.generators);
    if (d.size() == h.size())
      return false; // perfect and nontrivial
    h = std::move(d);
  }
  return true;
}

bool is_nilpotent(const Group& g)
{
  SubgroupSet gamma = whole_group(g);
  while (gamma.size() > 1) {
    std::vector<Element> seeds;
    for (auto x : g.generators())
      for (auto y : gamma.generators)
        seeds.push_back(g.commutator(x, y));
    SubgroupSet next = normal_closure(g, seeds, g.generators());
    if (next.size() == gamma.size())
      return false;
    gamma = std::move(next);
  }
  return true;
}

bool is_supersolvable(const Group& g, const SubgroupLattice& lattice)
{
  if (!is_solvable(g))
    return false;
  for (auto const& e : lattice.entries()) {
    if (!e.is_maximal)
      continue;
    if (!is_prime(g.order() / e.subgroup.size()))
      return false;
  }
  return true;
}

bool is_supersolvable(const Group& g, const Caps& caps)
{
  if (is_nilpotent(g))
    return true;
  if (!is_solvable(g))
    return false;
  return is_supersolvable(g, all_subgroups(g, caps));
}

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

bool normalizes(const Group& g, Element x, const SubgroupSet& h)
{
  for (auto y : h.generators)
    if (!h.contains(g.conjugate(y, x)))
      return false;
  return true;
}

} // namespace

SubgroupSet sylow_subgroup(const Group& g, std::uint64_t p)
{
  if (!is_prime(p) || g.order() % p != 0)
    throw Error(ErrorCode::Domain, "sylow_subgroup: p must be a prime dividing the group order");

  std::uint64_t target = 1;
  for (auto v = p_adic_valuation(g.order(), p); v > 0; --v)
    target *= p;

  std::vector<Element> p_elements;
  for (Element x = 1; x < g.order(); ++x)
    if (is_p_power(g.element_order(x), p))
      p_elements.push_back(x);

  // a non-Sylow p-subgroup H always has a p-element outside H normalizing it
  SubgroupSet h = trivial_subgroup(g);
  while (h.size() < target) {
    auto it = std::find_if(p_elements.begin(), p_elements.end(), [&](Element x) {
      return !h.contains(x) && normalizes(g, x, h);
    });
    if (it == p_elements.end())
      throw Error(ErrorCode::InternalInconsistency, "sylow_subgroup: no normalizing p-element");
    h = join(g, h, *it);
  }
  return h;
}

SylowShape sylow_is_cyclic_or_generalized_quaternion(const Group& g, std::uint64_t p)
{
  SubgroupSet s = sylow_subgroup(g, p);
  const std::size_t size = s.size();
  SylowShape shape;
  std::size_t involutions = 0;
  bool has_index_two_cyclic = false;
  s.members.for_each([&](Element e) {
    auto o = g.element_order(e);
    if (o == size)
      shape.cyclic = true;
    if (o == 2)
      ++involutions;
    if (2 * o == size)
      has_index_two_cyclic = true;
  });
  shape.generalized_quaternion = p == 2 && size >= 8 && !shape.cyclic && involutions == 1 &&
                                 has_index_two_cyclic;
  return shape;
}

std::vector<std::size_t> conjugacy_class_sizes(const Group& g)
{
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> sizes;
  std::vector<Element> orbit;
  for (Element x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    orbit.assign(1, x);
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto w : g.generators()) {
        Element y = g.conjugate(orbit[i], w);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool IsoFingerprint::compatible(const IsoFingerprint& other) const
{
  if (order != other.order || abelian != other.abelian || orders != other.orders ||
      cyclic_subgroups != other.cyclic_subgroups || class_sizes != other.class_sizes)
    return false;
  if (subgroups && other.subgroups && *subgroups != *other.subgroups)
    return false;
  return true;
}

IsoFingerprint iso_fingerprint(const Group& g, const Caps& caps)
{
  IsoFingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.orders = order_sequence(g);
  f.cyclic_subgroups = cyclic_subgroups(g).size();
  f.class_sizes = conjugacy_class_sizes(g);
  if (g.order() <= caps.lattice) {
    try {
      f.subgroups = all_subgroups(g, caps).size();
    } catch (const LatticeCapExceeded&) {
      f.subgroups.reset();
    }
  }
  return f;
}

namespace {

class IsoSearch {
public:
  IsoSearch(const Group& g, const Group& h) : g_(g), h_(h), gens_(g.generators())
  {
    images_.resize(gens_.size());
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (Element y = 0; y < h.order(); ++y)
        if (h.element_order(y) == g.element_order(gens_[i]))
          candidates_[i].push_back(y);
  }

  std::optional<std::vector<Element>> run()
  {
    if (search(0))
      return images_;
    return std::nullopt;
  }

private:
  bool search(std::size_t depth)
  {
    if (depth == gens_.size())
      return consistent(depth) == g_.order();
    for (auto y : candidates_[depth]) {
      images_[depth] = y;
      if (consistent(depth + 1) != 0 && search(depth + 1))
        return true;
    }
    return false;
  }

  // Extends the generator assignment over the subgroup the first `count`
  // generators span. Returns its size, or 0 if the map is not a well-defined
  // injective homomorphism there.
  std::size_t consistent(std::size_t count)
  {
    const Element unset = static_cast<Element>(g_.order());
    phi_.assign(g_.order(), unset);
    used_.assign(h_.order(), 0);
    phi_[0] = 0;
    used_[0] = 1;
    queue_.assign(1, 0);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      Element x = queue_[qi];
      for (std::size_t s = 0; s < count; ++s) {
        Element y = g_.mul(x, gens_[s]);
        Element img = h_.mul(phi_[x], images_[s]);
        if (phi_[y] == unset) {
          if (used_[img])
            return 0;
          phi_[y] = img;
          used_[img] = 1;
          queue_.push_back(y);
        } else if (phi_[y] != img) {
          return 0;
        }
      }
    }
    return queue_.size();
  }

  const Group& g_;
  const Group& h_;
  const std::vector<Element>& gens_;
  std::vector<Element> images_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> phi_;
  std::vector<char> used_;
  std::vector<Element> queue_;
};

} // namespace

std::optional<std::vector<Element>> find_isomorphism(const Group& g, const Group& h)
{
  if (g.order() != h.order())
    return std::nullopt;
  return IsoSearch(g, h).run();
}

bool is_isomorphic(const Group& g, const IsoFingerprint& fg, const Group& h,
                   const IsoFingerprint& fh, const Caps& caps)
{
  if (g.order() != h.order())
    return false;
  if (g.order() > caps.isomorphism)
    throw Error(ErrorCode::IsomorphismCapExceeded,
                "is_isomorphic: order " + std::to_string(g.order()) + " exceeds isomorphism cap " +
                    std::to_string(caps.isomorphism));
  if (!fg.compatible(fh))
    return false;
  return find_isomorphism(g, h).has_value();
}

bool is_isomorphic(const Group& g, const Group& h, const Caps& caps)
{
  if (g.order() != h.order())
    return false;
  if (g.order() > caps.isomorphism)
    throw Error(ErrorCode::IsomorphismCapExceeded,
                "is_isomorphic: order " + std::to_string(g.order()) + " exceeds isomorphism cap " +
                    std::to_string(caps.isomorphism));
  return is_isomorphic(g, iso_fingerprint(g, caps), h, iso_fingerprint(h, caps), caps);
}

} // namespace subcount
