#ifndef SUBCOUNT_CONSTRUCTORS_HPP
#define SUBCOUNT_CONSTRUCTORS_HPP

#include <cstdint>
#include <vector>

#include "subcount/group.hpp"

namespace subcount {

Group cyclic(std::uint64_t n, const Caps& caps = {});
/// Dihedral group of order 2n.
Group dihedral(std::uint64_t n, const Caps& caps = {});
/// Generalized quaternion group of order 2^k, k >= 3.
Group generalized_quaternion(std::uint64_t order, const Caps& caps = {});
Group symmetric(std::uint64_t n, const Caps& caps = {});
Group alternating(std::uint64_t n, const Caps& caps = {});

Group direct_product(const Group& g, const Group& h, const Caps& caps = {});

/// Pairs (x mod a, y mod b) with (x1, y1)(x2, y2) = (x1 + r^y1 x2, y1 + y2).
/// Throws Error(InvalidAction) unless r is a unit with r^b = 1 mod a.
Group semidirect_cyclic(const SemidirectSpec& spec, const Caps& caps = {});

Group sl2(std::uint64_t q, const Caps& caps = {});
/// SL(2,q)/{+-I}; each class is represented by the lexicographically least of
/// A and -A.
Group psl2(std::uint64_t q, const Caps& caps = {});

/// Order of PSL(2,q): q(q^2-1)/gcd(2,q-1).
std::uint64_t psl2_order(std::uint64_t q);

/// Every group of squarefree order n up to isomorphism, cyclic group first.
/// Throws Error(NotSquarefree).
std::vector<Group> squarefree_groups(std::uint64_t n, const Caps& caps = {});

} // namespace subcount

#endif // SUBCOUNT_CONSTRUCTORS_HPP
