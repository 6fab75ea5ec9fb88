#ifndef SUBCOUNT_CLASSIFY_HPP
#define SUBCOUNT_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "subcount/group.hpp"
#include "subcount/subgroups.hpp"

namespace subcount {

/// Derived series G > G' > G'' > ... reaches the trivial subgroup.
bool is_solvable(const Group& g);

/// Lower central series G = g_1 > [G, g_1] > ... reaches the trivial subgroup.
bool is_nilpotent(const Group& g);

/// Huppert: solvable and every maximal subgroup has prime index. Needs the
/// lattice unless nilpotency or non-solvability decides it first; propagates
/// LatticeCapExceeded.
bool is_supersolvable(const Group& g, const Caps& caps = {});
bool is_supersolvable(const Group& g, const SubgroupLattice& lattice);

/// A Sylow p-subgroup, grown one normalizing p-element at a time.
SubgroupSet sylow_subgroup(const Group& g, std::uint64_t p);

struct SylowShape {
  bool cyclic = false;
  bool generalized_quaternion = false;
};

SylowShape sylow_is_cyclic_or_generalized_quaternion(const Group& g, std::uint64_t p);

/// Multiset of conjugacy class sizes, ascending.
std::vector<std::size_t> conjugacy_class_sizes(const Group& g);

/// Cheap isomorphism invariants compared before the backtracking search.
struct IsoFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  OrderSequence orders;
  std::size_t cyclic_subgroups = 0;
  std::vector<std::size_t> class_sizes;
  std::optional<std::size_t> subgroups; // only when the lattice fits under caps

  bool compatible(const IsoFingerprint& other) const;
};

IsoFingerprint iso_fingerprint(const Group& g, const Caps& caps = {});

/// Images of g.generators() under an isomorphism g -> h, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const Group& g, const Group& h);

/// Fingerprint quick-reject, then backtracking over order-compatible images
/// of a generating set. Throws Error(IsomorphismCapExceeded) past caps.isomorphism.
bool is_isomorphic(const Group& g, const Group& h, const Caps& caps = {});
bool is_isomorphic(const Group& g, const IsoFingerprint& fg, const Group& h,
                   const IsoFingerprint& fh, const Caps& caps = {});

} // namespace subcount

#endif // SUBCOUNT_CLASSIFY_HPP
