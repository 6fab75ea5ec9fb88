#include "subcount/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "subcount/errors.hpp"
#include "subcount/numtheory.hpp"
#include "subcount/subgroups.hpp"

namespace subcount {

bool SemidirectSpec::coprime() const
{
  return std::gcd(a, b) == 1;
}

std::uint64_t SemidirectSpec::action_order() const
{
  return multiplicative_order(r % a, a);
}

std::string SemidirectSpec::to_string() const
{
  std::ostringstream os;
  os << "SD(" << a << ',' << b << ',' << r << ')';
  return os.str();
}

std::vector<std::uint64_t> OrderSequence::sorted() const
{
  std::vector<std::uint64_t> out;
  out.reserve(total);
  for (auto [order, count] : counts)
    out.insert(out.end(), count, order);
  return out;
}

Group::Group(std::string name, std::size_t order, std::vector<Element> table, Options options)
  : name_(std::move(name)), order_(order), table_(std::move(table)),
    labels_(std::move(options.labels)), semidirect_(options.semidirect)
{
  if (order_ == 0 || table_.size() != order_ * order_)
    throw Error(ErrorCode::InvalidTable, name_ + ": table size does not match order");
  if (!labels_.empty() && labels_.size() != order_)
    throw Error(ErrorCode::InvalidTable, name_ + ": label count does not match order");

  validate();

  inverse_.assign(order_, 0);
  for (Element i = 0; i < order_; ++i) {
    const Element* row = &table_[std::size_t{i} * order_];
    inverse_[i] = static_cast<Element>(std::find(row, row + order_, Element{0}) - row);
  }

  orders_.assign(order_, 1);
  for (Element i = 1; i < order_; ++i) {
    std::uint64_t k = 1;
    for (Element x = i; x != 0; x = mul(x, i))
      ++k;
    orders_[i] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  for (Element i = 0; i < order_ && abelian_; ++i)
    for (Element j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) {
        abelian_ = false;
        break;
      }

  if (!options.generators.empty()) {
    for (auto e : options.generators)
      if (e >= order_)
        throw Error(ErrorCode::InvalidTable, name_ + ": generator hint out of range");
    if (generate_subgroup(*this, options.generators).size() != order_)
      throw Error(ErrorCode::InvalidTable, name_ + ": generator hint does not generate");
    generators_ = std::move(options.generators);
  } else {
    // greedy: largest element orders first
    std::vector<Element> by_order(order_);
    std::iota(by_order.begin(), by_order.end(), Element{0});
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Element a, Element b) { return orders_[a] > orders_[b]; });
    SubgroupSet current = trivial_subgroup(*this);
    for (auto e : by_order) {
      if (current.size() == order_)
        break;
      if (!current.contains(e))
        current = join(*this, current, e);
    }
    generators_ = current.generators;
  }
}

void Group::validate() const
{
  const std::size_t n = order_;
  for (std::size_t j = 0; j < n; ++j) {
    if (table_[j] != j || table_[j * n] != j)
      throw Error(ErrorCode::InvalidTable, name_ + ": element 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = table_[i * n + j];
      if (v >= n || seen[v])
        throw Error(ErrorCode::InvalidTable, name_ + ": row is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = table_[i * n + j];
      if (seen[v])
        throw Error(ErrorCode::InvalidTable, name_ + ": column is not a permutation");
      seen[v] = 1;
    }
  }

  auto check = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw Error(ErrorCode::InvalidTable, name_ + ": table is not associative");
  };
  if (n <= 256) {
    for (Element a = 1; a < n; ++a)
      for (Element b = 1; b < n; ++b)
        for (Element c = 1; c < n; ++c)
          check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed'c0de'2024ULL ^ n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int k = 0; k < 10000; ++k)
      check(pick(rng), pick(rng), pick(rng));
  }
}

Group Group::from_multiplication(std::string name, std::size_t order,
                                 const std::function<Element(Element, Element)>& mul,
                                 Options options)
{
  std::vector<Element> table(order * order);
  for (Element i = 0; i < order; ++i)
    for (Element j = 0; j < order; ++j)
      table[std::size_t{i} * order + j] = mul(i, j);
  return Group(std::move(name), order, std::move(table), std::move(options));
}

Group Group::trivial()
{
  return Group("1", 1, std::vector<Element>{0});
}

Element Group::power(Element a, std::uint64_t k) const noexcept
{
  k %= orders_[a];
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1U)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::string Group::label(Element e) const
{
  if (!labels_.empty())
    return labels_[e];
  return std::to_string(e);
}

std::uint64_t Group::table_hash() const noexcept
{
  std::uint64_t h = 1469598103934665603ULL ^ order_;
  for (auto v : table_) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept
  {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::string image_label(const Permutation& p)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i)
    os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

} // namespace

Group group_from_generators(std::size_t degree, std::span<const Permutation> generators,
                            std::string name, const Caps& caps)
{
  for (auto const& g : generators) {
    if (g.size() != degree)
      throw Error(ErrorCode::InvalidPermutation, name + ": generator has wrong length");
    std::vector<char> seen(degree);
    for (auto v : g) {
      if (v >= degree || seen[v])
        throw Error(ErrorCode::InvalidPermutation, name + ": generator images are not a bijection");
      seen[v] = 1;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);

  // (a * b)[x] = a[b[x]]; elements are discovered as parent * generator
  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Element, PermHash> index{{id, 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  const std::size_t k = generators.size();
  std::vector<Element> right; // right[x * k + s] = x * gen_s

  Permutation tmp(degree);
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t i = 0; i < degree; ++i)
        tmp[i] = elems[x][generators[s][i]];
      auto [it, fresh] = index.try_emplace(tmp, static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() >= caps.order)
          throw Error(ErrorCode::OrderCapExceeded,
                      name + ": closure exceeds order cap " + std::to_string(caps.order));
        elems.push_back(tmp);
        parent.push_back(static_cast<Element>(x));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Element>(i);
    // elements in discovery order, so parent[j] < j
    for (std::size_t j = 1; j < n; ++j) {
      Element left = table[i * n + parent[j]];
      table[i * n + j] = right[std::size_t{left} * k + via[j]];
    }
  }

  Group::Options options;
  options.labels.reserve(n);
  for (auto const& p : elems)
    options.labels.push_back(image_label(p));
  return Group(std::move(name), n, std::move(table), std::move(options));
}

std::uint64_t element_order(const Group& g, Element i)
{
  if (i >= g.order())
    throw Error(ErrorCode::Domain, "element_order: index out of range");
  return g.element_order(i);
}

OrderSequence order_sequence(const Group& g)
{
  OrderSequence os;
  for (Element i = 0; i < g.order(); ++i)
    ++os.counts[g.element_order(i)];
  os.total = g.order();
  return os;
}

} // namespace subcount
