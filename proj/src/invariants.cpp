#include "subcount/invariants.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "subcount/classify.hpp"
#include "subcount/errors.hpp"
#include "subcount/numtheory.hpp"
#include "subcount/subgroups.hpp"

namespace subcount {

std::uint64_t cyc_by_phi_sum(const Group& g)
{
  ExactRational sum;
  for (Element x = 0; x < g.order(); ++x)
    sum += ExactRational(1, static_cast<std::int64_t>(euler_phi(g.element_order(x))));
  if (!sum.is_integer())
    throw Error(ErrorCode::InternalInconsistency,
                g.name() + ": sum of 1/phi(o(g)) is " + sum.to_string() + ", not an integer");
  return static_cast<std::uint64_t>(sum.numerator());
}

std::uint64_t cyc_by_enumeration(const Group& g)
{
  return cyclic_subgroups(g).size();
}

std::uint64_t sub_count(const Group& g, const Caps& caps)
{
  return all_subgroups(g, caps).size();
}

std::uint64_t involution_count(const Group& g)
{
  std::uint64_t n = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2)
      ++n;
  return n;
}

std::uint64_t psl2_involution_formula(std::uint64_t q)
{
  if (!prime_power_decompose(q))
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q % 2 == 0)
    throw Error(ErrorCode::EvenCharacteristic, "involution formula needs odd q");
  return q % 4 == 1 ? q * (q + 1) / 2 : q * (q - 1) / 2;
}

std::uint64_t predicted_cyc_semidirect(std::uint64_t p_t, std::uint32_t t, std::uint32_t pi_k)
{
  if (t < 2 || pi_k < 1 || pi_k > t - 1 || p_t % 2 == 0 || !is_prime(p_t))
    throw Error(ErrorCode::Domain, "predicted_cyc_semidirect: need odd prime p_t and 1 <= pi_k <= t-1");
  return p_t * (std::uint64_t{1} << (t - 1)) - (p_t - 2) * (std::uint64_t{1} << (t - 1 - pi_k));
}

bool dominates(const OrderSequence& a, const OrderSequence& b)
{
  if (a.total != b.total)
    throw Error(ErrorCode::SizeMismatch, "dominates: order sequences have different lengths");
  auto sa = a.sorted(), sb = b.sorted();
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (sa[i] < sb[i])
      return false;
  return true;
}

namespace {

class MaxFlow {
public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes) {}

  void add_edge(std::size_t u, std::size_t v, std::uint64_t cap)
  {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0});
  }

  // Edmonds-Karp
  std::uint64_t run(std::size_t s, std::size_t t)
  {
    std::uint64_t flow = 0;
    for (;;) {
      std::vector<std::size_t> via(adj_.size(), SIZE_MAX);
      std::queue<std::size_t> bfs;
      bfs.push(s);
      while (!bfs.empty() && via[t] == SIZE_MAX) {
        auto u = bfs.front();
        bfs.pop();
        for (auto id : adj_[u]) {
          auto const& e = edges_[id];
          if (e.cap > 0 && via[e.to] == SIZE_MAX && e.to != s) {
            via[e.to] = id;
            bfs.push(e.to);
          }
        }
      }
      if (via[t] == SIZE_MAX)
        return flow;
      std::uint64_t push = std::numeric_limits<std::uint64_t>::max();
      for (auto v = t; v != s; v = edges_[via[v] ^ 1].to)
        push = std::min(push, edges_[via[v]].cap);
      for (auto v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= push;
        edges_[via[v] ^ 1].cap += push;
      }
      flow += push;
    }
  }

private:
  struct Edge {
    std::size_t to;
    std::uint64_t cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
};

} // namespace

bool strongly_dominates(const OrderSequence& a, const OrderSequence& b)
{
  if (a.total != b.total)
    throw Error(ErrorCode::SizeMismatch, "strongly_dominates: order sequences have different lengths");

  const std::size_t left = a.counts.size(), right = b.counts.size();
  const std::size_t source = 0, sink = 1 + left + right;
  MaxFlow net(left + right + 2);
  std::size_t i = 0;
  for (auto [d, ca] : a.counts) {
    net.add_edge(source, 1 + i, ca);
    std::size_t j = 0;
    for (auto [m, cb] : b.counts) {
      (void)cb;
      if (d % m == 0)
        net.add_edge(1 + i, 1 + left + j, std::numeric_limits<std::uint64_t>::max() / 4);
      ++j;
    }
    ++i;
  }
  std::size_t j = 0;
  for (auto [m, cb] : b.counts) {
    (void)m;
    net.add_edge(1 + left + j, sink, cb);
    ++j;
  }
  return net.run(source, sink) == a.total;
}

bool InvariantRecord::has_generalized_quaternion_sylow() const
{
  return std::any_of(sylow.begin(), sylow.end(),
                     [](const SylowFlags& s) { return s.generalized_quaternion; });
}

InvariantRecord invariant_record(const Group& g, const Caps& caps)
{
  InvariantRecord r;
  r.name = g.name();
  r.order = g.order();
  r.t = g.order() >= 2 ? distinct_prime_count(g.order()) : 0;
  r.orders = order_sequence(g);
  r.semidirect = g.semidirect();

  const auto by_phi = cyc_by_phi_sum(g);
  const auto by_enum = cyc_by_enumeration(g);
  if (by_phi != by_enum)
    throw Error(ErrorCode::InternalInconsistency,
                g.name() + ": cyc by phi-sum " + std::to_string(by_phi) + " != enumeration " +
                    std::to_string(by_enum));
  r.cyc = by_enum;
  r.is_cyclic = false;
  for (Element x = 0; x < g.order() && !r.is_cyclic; ++x)
    r.is_cyclic = g.element_order(x) == g.order();
  r.nilpotent = is_nilpotent(g);
  r.solvable = is_solvable(g);

  std::optional<SubgroupLattice> lattice;
  try {
    lattice = all_subgroups(g, caps);
    r.sub = lattice->size();
  } catch (const LatticeCapExceeded& e) {
    r.notes = std::string("sub omitted: ") + e.what();
    if (e.partial_count() > 0)
      r.notes += " (partial count " + std::to_string(e.partial_count()) + ")";
  }

  if (r.nilpotent)
    r.supersolvable = true;
  else if (!r.solvable)
    r.supersolvable = false;
  else if (lattice)
    r.supersolvable = is_supersolvable(g, *lattice);

  if (g.order() >= 2) {
    for (auto [p, e] : factorize(g.order())) {
      SylowFlags s{p, e, true, false};
      if (e >= 2) {
        auto shape = sylow_is_cyclic_or_generalized_quaternion(g, p);
        s.cyclic = shape.cyclic;
        s.generalized_quaternion = shape.generalized_quaternion;
      }
      r.sylow.push_back(s);
    }
  }
  return r;
}

} // namespace subcount
