#ifndef SUBCOUNT_GROUP_HPP
#define SUBCOUNT_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subcount/element_set.hpp"

namespace subcount {

/// Operator-tunable limits. None of these are hard-coded elsewhere.
struct Caps {
  std::size_t order = 20000;            // largest multiplication table we build
  std::size_t lattice = 2000;           // largest group whose subgroup lattice we enumerate
  std::size_t subgroup_count = 1000000; // abort lattice enumeration past this many subgroups
  std::size_t isomorphism = 2000;       // largest order handed to the isomorphism search
};

/// Z_a x| Z_b with the generator of Z_b acting on Z_a as x -> r x.
struct SemidirectSpec {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t r = 1;

  bool coprime() const;
  /// Multiplicative order of r modulo a.
  std::uint64_t action_order() const;
  std::string to_string() const;

  friend bool operator==(const SemidirectSpec&, const SemidirectSpec&) = default;
};

/// Multiset of element orders as order -> multiplicity.
struct OrderSequence {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  /// Expanded ascending sequence (o(g_1) <= o(g_2) <= ...).
  std::vector<std::uint64_t> sorted() const;

  friend bool operator==(const OrderSequence&, const OrderSequence&) = default;
};

/// A finite group as a materialized multiplication table. Element 0 is the
/// identity. Immutable after construction, so instances can be shared across
/// threads freely.
class Group {
public:
  struct Options {
    std::vector<std::string> labels;
    std::optional<SemidirectSpec> semidirect;
    std::vector<Element> generators; // optional hint; a greedy set is computed otherwise
  };

  /// Validates the table: identity row/column, Latin square, associativity
  /// (exhaustive up to order 256, 10^4 random triples above). Throws
  /// Error(InvalidTable) on failure.
  Group(std::string name, std::size_t order, std::vector<Element> table, Options options);
  Group(std::string name, std::size_t order, std::vector<Element> table)
    : Group(std::move(name), order, std::move(table), Options{}) {}

  /// Builds the table by calling mul(i, j) for every pair.
  static Group from_multiplication(std::string name, std::size_t order,
                                   const std::function<Element(Element, Element)>& mul,
                                   Options options = {});

  static Group trivial();

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Element conjugate(Element x, Element g) const noexcept { return mul(mul(g, x), inverse(g)); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept
  { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }
  Element power(Element a, std::uint64_t k) const noexcept;

  std::uint64_t element_order(Element a) const noexcept { return orders_[a]; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return abelian_; }

  /// A small generating set (empty for the trivial group).
  const std::vector<Element>& generators() const noexcept { return generators_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element e) const;
  const std::optional<SemidirectSpec>& semidirect() const noexcept { return semidirect_; }

  /// Stable hash of the table, used for deterministic ordering.
  std::uint64_t table_hash() const noexcept;

private:
  void validate() const;

  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  bool abelian_ = true;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
  std::optional<SemidirectSpec> semidirect_;
};

/// A permutation as its image array: p[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

/// Breadth-first closure of permutation generators. Throws
/// Error(InvalidPermutation) or Error(OrderCapExceeded).
Group group_from_generators(std::size_t degree, std::span<const Permutation> generators,
                            std::string name, const Caps& caps = {});

std::uint64_t element_order(const Group& g, Element i);
OrderSequence order_sequence(const Group& g);

} // namespace subcount

#endif // SUBCOUNT_GROUP_HPP
