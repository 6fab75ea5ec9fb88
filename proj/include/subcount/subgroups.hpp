#ifndef SUBCOUNT_SUBGROUPS_HPP
#define SUBCOUNT_SUBGROUPS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "subcount/element_set.hpp"
#include "subcount/group.hpp"

namespace subcount {

/// A subgroup of some parent Group, as a member bitset plus generators.
/// The parent is passed explicitly to every operation.
struct SubgroupSet {
  ElementSet members;
  std::vector<Element> generators;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element e) const noexcept { return members.contains(e); }
};

SubgroupSet trivial_subgroup(const Group& g);
SubgroupSet whole_group(const Group& g);

/// Subgroup generated by the given elements.
SubgroupSet generate_subgroup(const Group& g, std::span<const Element> generators);

/// <H, x>, built coset by coset from H.
SubgroupSet join(const Group& g, const SubgroupSet& h, Element x);

/// Smallest subgroup of <within> containing seeds and normalized by within.
SubgroupSet normal_closure(const Group& g, std::span<const Element> seeds,
                           std::span<const Element> within);

/// One entry per distinct <g>, trivial subgroup first, in index order of the
/// first generator found.
std::vector<SubgroupSet> cyclic_subgroups(const Group& g);

bool is_normal(const SubgroupSet& h, const Group& g);
bool is_cyclic(const SubgroupSet& h, const Group& g);

struct LatticeEntry {
  SubgroupSet subgroup;
  bool is_normal = false;
  bool is_cyclic = false;
  bool is_maximal = false;
};

/// Every subgroup of a group exactly once, sorted by (size, member list).
class SubgroupLattice {
public:
  SubgroupLattice(std::size_t group_order, std::vector<LatticeEntry> entries)
    : group_order_(group_order), entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t group_order() const noexcept { return group_order_; }
  const std::vector<LatticeEntry>& entries() const noexcept { return entries_; }
  const LatticeEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Index of the subgroup with exactly these members, or size() if absent.
  std::size_t find(const ElementSet& members) const;

private:
  std::size_t group_order_;
  std::vector<LatticeEntry> entries_;
};

/// Join-closure from cyclic atoms. Throws LatticeCapExceeded when the group
/// is larger than caps.lattice or the lattice outgrows caps.subgroup_count.
SubgroupLattice all_subgroups(const Group& g, const Caps& caps = {});

std::vector<SubgroupSet> maximal_subgroups(const SubgroupLattice& lattice);

} // namespace subcount

#endif // SUBCOUNT_SUBGROUPS_HPP
