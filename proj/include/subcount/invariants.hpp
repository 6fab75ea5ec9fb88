#ifndef SUBCOUNT_INVARIANTS_HPP
#define SUBCOUNT_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcount/group.hpp"

namespace subcount {

/// cyc(G) as the exact sum over g of 1/phi(o(g)). Throws
/// Error(InternalInconsistency) if the sum is not an integer.
std::uint64_t cyc_by_phi_sum(const Group& g);

/// cyc(G) as the number of distinct cyclic subgroups.
std::uint64_t cyc_by_enumeration(const Group& g);

/// sub(G); propagates LatticeCapExceeded.
std::uint64_t sub_count(const Group& g, const Caps& caps = {});

/// Elements of order exactly 2.
std::uint64_t involution_count(const Group& g);

/// q(q+1)/2 for q = 1 mod 4, q(q-1)/2 for q = 3 mod 4. Throws
/// Error(EvenCharacteristic) for even q, Error(NotPrimePower) otherwise.
std::uint64_t psl2_involution_formula(std::uint64_t q);

/// cyc(Z_p x| Z_m) = p 2^(t-1) - (p-2) 2^(t-1-pi_k), where m is squarefree
/// with t-1 primes and the action has order k with pi_k prime factors.
std::uint64_t predicted_cyc_semidirect(std::uint64_t p_t, std::uint32_t t, std::uint32_t pi_k);

/// Sorted ascending, pointwise >=. Throws Error(SizeMismatch).
bool dominates(const OrderSequence& a, const OrderSequence& b);

/// A bijection f with o(f(g)) | o(g): max flow from order classes of a to
/// the classes of b they are divisible by. Throws Error(SizeMismatch).
bool strongly_dominates(const OrderSequence& a, const OrderSequence& b);

struct SylowFlags {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  bool cyclic = false;
  bool generalized_quaternion = false;
};

/// Everything the verifier needs about one group.
struct InvariantRecord {
  std::string name;
  std::uint64_t order = 1;
  std::uint32_t t = 0; // 0 for the trivial group
  std::uint64_t cyc = 0;
  std::optional<std::uint64_t> sub;
  bool is_cyclic = false;
  bool nilpotent = false;
  std::optional<bool> supersolvable;
  bool solvable = false;
  std::vector<SylowFlags> sylow;
  OrderSequence orders;
  std::optional<SemidirectSpec> semidirect;
  std::string notes; // why sub or supersolvable is missing

  bool has_generalized_quaternion_sylow() const;
};

/// Computes cyc both ways and throws Error(InternalInconsistency) if they
/// disagree. Lattice cap hits leave sub/supersolvable empty with a note.
InvariantRecord invariant_record(const Group& g, const Caps& caps = {});

} // namespace subcount

#endif // SUBCOUNT_INVARIANTS_HPP
