#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subcount/classify.hpp"
#include "subcount/constructors.hpp"
#include "subcount/errors.hpp"
#include "subcount/finite_field.hpp"
#include "subcount/group.hpp"
#include "subcount/group_spec.hpp"
#include "subcount/subgroups.hpp"

using namespace subcount;

namespace {

Group z_table(std::size_t n)
{
  return Group::from_multiplication("Z" + std::to_string(n), n,
                                    [n](Element a, Element b) { return Element((a + b) % n); });
}

std::set<oracle::Members> lattice_members(const SubgroupLattice& lat)
{
  std::set<oracle::Members> out;
  for (auto const& e : lat.entries())
    out.insert(e.subgroup.members.members());
  return out;
}

// Small groups of several shapes for the oracle comparisons.
const std::vector<std::string> kSmallSpecs = {
  "Z(1)", "Z(12)", "Z(2) x Z(2) x Z(2)", "D(4)", "Q(8)", "S(3)", "A(4)", "D(6)",
  "Z(3) x S(3)", "Q(16)", "S(4)", "Z(2) x A(4)", "SD(7,3,2)", "SD(5,4,2)", "SL(2,3)",
  "Z(4) x Z(4)", "D(5) x Z(3)", "A(5)",
};

} // namespace

TEST_CASE("table validation")
{
  CHECK(z_table(5).order() == 5);
  CHECK_THROWS_AS(Group("bad", 2, std::vector<Element>{0, 1, 1, 1}), Error);
  CHECK_THROWS_AS(Group("short", 2, std::vector<Element>{0, 1, 1}), Error);
  // Latin square with identity but not associative.
  std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(Group("loop", 5, loop), Error);
}

TEST_CASE("element orders and basic structure")
{
  Group g = symmetric(4);
  CHECK(g.order() == 24);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.exponent() == 12);
  for (Element x = 0; x < g.order(); ++x) {
    CHECK(g.element_order(x) == oracle::naive_order(g, x));
    CHECK(g.mul(x, g.inverse(x)) == Group::identity());
    CHECK(g.power(x, g.element_order(x)) == Group::identity());
  }
  auto os = order_sequence(g);
  CHECK(os.total == 24);
  CHECK(os.counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  auto sorted = os.sorted();
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
  CHECK(oracle::closure(g, g.generators()).size() == g.order());
}

TEST_CASE("permutation closure")
{
  std::vector<Permutation> gens = {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
  CHECK(group_from_generators(5, gens, "S5").order() == 120);
  std::vector<Permutation> none;
  CHECK(group_from_generators(3, none, "1").order() == 1);
  std::vector<Permutation> bad = {{0, 0, 1}};
  CHECK_THROWS_AS(group_from_generators(3, bad, "bad"), Error);
  Caps tight;
  tight.order = 100;
  CHECK_THROWS_AS(group_from_generators(5, gens, "S5", tight), Error);
}

TEST_CASE("element set")
{
  ElementSet a(130), b(130);
  CHECK(a.insert(3));
  CHECK_FALSE(a.insert(3));
  a.insert(129);
  b.insert(3);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.intersection(b) == b);
  CHECK(a.members() == std::vector<Element>{3, 129});
}

TEST_CASE("cyclic subgroups against the set oracle")
{
  for (auto const& spec : kSmallSpecs) {
    CAPTURE(spec);
    Group g = build_group_spec(spec);
    CHECK(cyclic_subgroups(g).size() == oracle::cyclic_subgroup_count(g));
  }
}

TEST_CASE("subgroup lattice against adjoin-one-element enumeration")
{
  for (auto const& spec : kSmallSpecs) {
    CAPTURE(spec);
    Group g = build_group_spec(spec);
    auto lat = all_subgroups(g);
    CHECK(lattice_members(lat) == oracle::all_subgroups(g));
  }
}

TEST_CASE("lattice flags")
{
  Group g = build_group_spec("S(3)");
  auto lat = all_subgroups(g);
  REQUIRE(lat.size() == 6);
  std::size_t normal = 0, cyclic = 0, maximal = 0;
  for (auto const& e : lat.entries()) {
    normal += e.is_normal;
    cyclic += e.is_cyclic;
    maximal += e.is_maximal;
    CHECK(e.is_normal == oracle::normal_in(g, e.subgroup.members.members()));
  }
  CHECK(normal == 3);
  CHECK(cyclic == 5);
  CHECK(maximal == 4);
  CHECK(maximal_subgroups(lat).size() == 4);
  CHECK(lat.find(whole_group(g).members) == lat.size() - 1);
  CHECK(lat.find(trivial_subgroup(g).members) == 0);
}

TEST_CASE("lattice caps")
{
  Caps caps;
  caps.lattice = 10;
  CHECK_THROWS_AS(all_subgroups(symmetric(4), caps), LatticeCapExceeded);
  caps.lattice = 1000;
  caps.subgroup_count = 5;
  CHECK_THROWS_AS(all_subgroups(symmetric(4), caps), LatticeCapExceeded);
}

TEST_CASE("join and normal closure")
{
  Group g = symmetric(4);
  auto h = generate_subgroup(g, std::vector<Element>{g.generators()[0]});
  for (Element x = 0; x < g.order(); ++x) {
    auto j = join(g, h, x);
    auto seeds = h.members.members();
    seeds.push_back(x);
    CHECK(j.members.members() == oracle::closure(g, seeds));
  }
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  for (Element x = 1; x < g.order(); ++x) {
    auto n = normal_closure(g, std::vector<Element>{x}, all);
    CHECK(is_normal(n, g));
    CHECK(oracle::normal_in(g, n.members.members()));
  }
}

TEST_CASE("classification against oracles")
{
  for (auto const& spec : kSmallSpecs) {
    CAPTURE(spec);
    Group g = build_group_spec(spec);
    CHECK(is_nilpotent(g) == oracle::nilpotent_by_sylow_count(g));
    CHECK(is_solvable(g) == oracle::solvable_by_derived_series(g));
    CHECK(is_supersolvable(g) == oracle::supersolvable_by_peeling(g));
  }
  CHECK_FALSE(is_supersolvable(alternating(4)));
  CHECK(is_supersolvable(symmetric(3)));
  CHECK_FALSE(is_solvable(alternating(5)));
}

TEST_CASE("sylow subgroups")
{
  Group g = build_group_spec("SL(2,3)");
  auto p2 = sylow_subgroup(g, 2);
  CHECK(p2.size() == 8);
  auto shape = sylow_is_cyclic_or_generalized_quaternion(g, 2);
  CHECK(shape.generalized_quaternion);
  CHECK_FALSE(shape.cyclic);
  CHECK(sylow_is_cyclic_or_generalized_quaternion(g, 3).cyclic);
  CHECK_FALSE(sylow_is_cyclic_or_generalized_quaternion(dihedral(4), 2).generalized_quaternion);
  CHECK(sylow_subgroup(symmetric(5), 5).size() == 5);
}

TEST_CASE("isomorphism")
{
  CHECK(is_isomorphic(build_group_spec("Z(2) x Z(3)"), cyclic(6)));
  CHECK(is_isomorphic(build_group_spec("D(3)"), symmetric(3)));
  CHECK_FALSE(is_isomorphic(dihedral(4), generalized_quaternion(8)));
  CHECK_FALSE(is_isomorphic(build_group_spec("Z(4) x Z(2)"), build_group_spec("Z(2) x Z(2) x Z(2)")));
  CHECK(is_isomorphic(build_group_spec("PSL(2,4)"), alternating(5)));
  CHECK(is_isomorphic(build_group_spec("PSL(2,5)"), alternating(5)));
  CHECK(is_isomorphic(build_group_spec("PSL(2,3)"), alternating(4)));
  auto map = find_isomorphism(dihedral(6), build_group_spec("Z(2) x S(3)"));
  CHECK(map.has_value());
  CHECK(conjugacy_class_sizes(symmetric(4)) == std::vector<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("finite fields")
{
  for (std::uint64_t q : {2, 3, 4, 8, 9, 25, 27}) {
    CAPTURE(q);
    FiniteField f(q);
    CHECK(f.size() == q);
    for (std::uint32_t a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, q - 1) == 1);
    }
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; c += 3)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
  CHECK(is_irreducible(Poly{1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible(Poly{1, 0, 1}, 2));
  CHECK(is_irreducible(Poly{1, 1, 0, 0, 1}, 2));
  CHECK_FALSE(is_irreducible(Poly{1, 0, 1, 0, 1}, 2));
}
