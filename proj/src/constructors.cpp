#include "subcount/constructors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "subcount/classify.hpp"
#include "subcount/errors.hpp"
#include "subcount/finite_field.hpp"
#include "subcount/numtheory.hpp"

namespace subcount {

namespace {

void require_order(std::uint64_t order, const Caps& caps, const std::string& what)
{
  if (order > caps.order)
    throw Error(ErrorCode::OrderCapExceeded,
                what + ": order " + std::to_string(order) + " exceeds order cap " +
                    std::to_string(caps.order));
}

std::string arg_name(const char* head, std::uint64_t n)
{
  return std::string(head) + "(" + std::to_string(n) + ")";
}

} // namespace

Group cyclic(std::uint64_t n, const Caps& caps)
{
  if (n < 1)
    throw Error(ErrorCode::Domain, "Z(n) needs n >= 1");
  require_order(n, caps, arg_name("Z", n));
  return Group::from_multiplication(arg_name("Z", n), n, [n](Element i, Element j) {
    return static_cast<Element>((i + j) % n);
  });
}

Group dihedral(std::uint64_t n, const Caps& caps)
{
  if (n < 1)
    throw Error(ErrorCode::Domain, "D(n) needs n >= 1");
  require_order(2 * n, caps, arg_name("D", n));
  // index i + n*j stands for r^i s^j
  return Group::from_multiplication(arg_name("D", n), 2 * n, [n](Element x, Element y) {
    std::uint64_t i = x % n, j = x / n, k = y % n, l = y / n;
    std::uint64_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
    return static_cast<Element>(rot + n * ((j + l) % 2));
  });
}

Group generalized_quaternion(std::uint64_t order, const Caps& caps)
{
  auto pf = prime_power_decompose(order);
  if (!pf || pf->first != 2 || pf->second < 3)
    throw Error(ErrorCode::Domain, "Q(n) needs n = 2^k with k >= 3");
  require_order(order, caps, arg_name("Q", order));
  const std::uint64_t half = order / 2; // order of a
  const std::uint64_t quarter = order / 4;
  // index i + half*j stands for a^i b^j, with b a = a^-1 b and b^2 = a^quarter
  return Group::from_multiplication(arg_name("Q", order), order, [=](Element x, Element y) {
    std::uint64_t i = x % half, j = x / half, k = y % half, l = y / half;
    if (j == 0)
      return static_cast<Element>((i + k) % half + half * l);
    std::uint64_t rot = (i + half - k) % half;
    if (l == 0)
      return static_cast<Element>(rot + half);
    return static_cast<Element>((rot + quarter) % half);
  });
}

Group symmetric(std::uint64_t n, const Caps& caps)
{
  if (n < 1 || n > 7)
    throw Error(ErrorCode::Domain, "S(n) needs 1 <= n <= 7");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0U);
    std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < n; ++i)
      cycle[i] = (i + 1) % n;
    gens = {cycle, swap};
  }
  return group_from_generators(n, gens, arg_name("S", n), caps);
}

Group alternating(std::uint64_t n, const Caps& caps)
{
  if (n < 1 || n > 7)
    throw Error(ErrorCode::Domain, "A(n) needs 1 <= n <= 7");
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < n; ++i) {
    Permutation c(n);
    std::iota(c.begin(), c.end(), 0U);
    c[0] = 1;
    c[1] = i;
    c[i] = 0;
    gens.push_back(c);
  }
  return group_from_generators(n, gens, arg_name("A", n), caps);
}

Group direct_product(const Group& g, const Group& h, const Caps& caps)
{
  const std::uint64_t n = g.order(), m = h.order();
  std::string name = g.name() + " x " + h.name();
  require_order(n * m, caps, name);
  Group::Options options;
  for (auto x : g.generators())
    options.generators.push_back(static_cast<Element>(x * m));
  for (auto y : h.generators())
    options.generators.push_back(y);
  return Group::from_multiplication(
    std::move(name), n * m,
    [&](Element a, Element b) {
      return static_cast<Element>(g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
    },
    std::move(options));
}

Group semidirect_cyclic(const SemidirectSpec& spec, const Caps& caps)
{
  const auto [a, b, r] = spec;
  if (a < 1 || b < 1)
    throw Error(ErrorCode::Domain, "SD(a,b,r) needs a, b >= 1");
  const std::uint64_t rr = r % a;
  if (a > 1 && (std::gcd(rr, a) != 1 || pow_mod(rr, b, a) != 1))
    throw Error(ErrorCode::InvalidAction,
                spec.to_string() + ": r must be a unit with r^b = 1 mod a");
  require_order(a * b, caps, spec.to_string());

  std::vector<std::uint64_t> rpow(b, 1 % a);
  for (std::uint64_t y = 1; y < b; ++y)
    rpow[y] = mul_mod(rpow[y - 1], rr, a);

  Group::Options options;
  options.semidirect = spec;
  // index x*b + y stands for (x, y)
  return Group::from_multiplication(
    spec.to_string(), a * b,
    [&](Element u, Element v) {
      std::uint64_t x1 = u / b, y1 = u % b, x2 = v / b, y2 = v % b;
      std::uint64_t x = (x1 + mul_mod(rpow[y1], x2, a)) % a;
      return static_cast<Element>(x * b + (y1 + y2) % b);
    },
    std::move(options));
}

std::uint64_t psl2_order(std::uint64_t q)
{
  return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

namespace {

using Matrix = std::array<std::uint32_t, 4>; // a b / c d

struct MatrixGroup {
  std::vector<Matrix> elements;
  std::vector<std::uint32_t> index; // by code, or UINT32_MAX
};

std::uint64_t code(const Matrix& m, std::uint64_t q)
{
  return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
}

Matrix matmul(const FiniteField& f, const Matrix& x, const Matrix& y)
{
  return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
          f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
}

Matrix negate(const FiniteField& f, const Matrix& x)
{
  return {f.neg(x[0]), f.neg(x[1]), f.neg(x[2]), f.neg(x[3])};
}

std::string matrix_label(const Matrix& m)
{
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
         "," + std::to_string(m[3]) + "]]";
}

// SL(2,q) elements (or canonical PSL representatives), identity first and
// the rest in lexicographic order of (a, b, c, d).
MatrixGroup special_linear_elements(const FiniteField& f, bool projective)
{
  const std::uint64_t q = f.size();
  MatrixGroup mg;
  mg.index.assign(q * q * q * q, UINT32_MAX);
  const Matrix id{1, 0, 0, 1};
  mg.elements.push_back(id);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          Matrix m{a, b, c, d};
          if (f.sub(f.mul(a, d), f.mul(b, c)) != 1 || m == id)
            continue;
          if (projective && code(negate(f, m), q) < code(m, q))
            continue;
          if (projective && negate(f, m) == id)
            continue;
          mg.elements.push_back(m);
        }
  for (std::uint32_t i = 0; i < mg.elements.size(); ++i)
    mg.index[code(mg.elements[i], q)] = i;
  return mg;
}

Group matrix_group(std::string name, const FiniteField& f, bool projective)
{
  const std::uint64_t q = f.size();
  MatrixGroup mg = special_linear_elements(f, projective);
  Group::Options options;
  for (auto const& m : mg.elements)
    options.labels.push_back(matrix_label(m));
  return Group::from_multiplication(
    std::move(name), mg.elements.size(),
    [&](Element i, Element j) {
      Matrix p = matmul(f, mg.elements[i], mg.elements[j]);
      if (projective) {
        Matrix n = negate(f, p);
        if (code(n, q) < code(p, q))
          p = n;
      }
      return static_cast<Element>(mg.index[code(p, q)]);
    },
    std::move(options));
}

} // namespace

Group sl2(std::uint64_t q, const Caps& caps)
{
  if (!prime_power_decompose(q))
    throw Error(ErrorCode::NotPrimePower, "SL(2," + std::to_string(q) + "): q is not a prime power");
  std::string name = "SL(2," + std::to_string(q) + ")";
  require_order(q * (q * q - 1), caps, name);
  FiniteField f(q);
  return matrix_group(std::move(name), f, false);
}

Group psl2(std::uint64_t q, const Caps& caps)
{
  if (!prime_power_decompose(q))
    throw Error(ErrorCode::NotPrimePower, "PSL(2," + std::to_string(q) + "): q is not a prime power");
  if (q < 3)
    throw Error(ErrorCode::Domain, "PSL(2,q) needs q >= 3");
  std::string name = "PSL(2," + std::to_string(q) + ")";
  require_order(psl2_order(q), caps, name);
  FiniteField f(q);
  return matrix_group(std::move(name), f, q % 2 == 1);
}

std::vector<Group> squarefree_groups(std::uint64_t n, const Caps& caps)
{
  if (n < 1 || !is_squarefree(n))
    throw Error(ErrorCode::NotSquarefree, std::to_string(n) + " is not squarefree");

  std::vector<Group> found;
  std::vector<IsoFingerprint> prints;
  found.push_back(cyclic(n, caps));
  prints.push_back(iso_fingerprint(found.back(), caps));

  // every group of squarefree order is Z_a x| Z_b with gcd(a, b) = 1; the
  // trivial actions all give Z_n, so only nontrivial ones are tried
  std::vector<Group> nonabelian;
  std::vector<IsoFingerprint> nonabelian_prints;
  for (auto a : divisors(n)) {
    const std::uint64_t b = n / a;
    for (std::uint64_t r = 2; r < a; ++r) {
      if (std::gcd(r, a) != 1 || pow_mod(r, b, a) != 1)
        continue;
      Group cand = semidirect_cyclic({a, b, r}, caps);
      IsoFingerprint fp = iso_fingerprint(cand, caps);
      bool duplicate = false;
      for (std::size_t i = 0; i < nonabelian.size() && !duplicate; ++i)
        duplicate = is_isomorphic(cand, fp, nonabelian[i], nonabelian_prints[i], caps);
      if (!duplicate) {
        nonabelian.push_back(std::move(cand));
        nonabelian_prints.push_back(std::move(fp));
      }
    }
  }
  std::stable_sort(nonabelian.begin(), nonabelian.end(), [](const Group& x, const Group& y) {
    return x.table_hash() < y.table_hash();
  });
  for (auto& g : nonabelian)
    found.push_back(std::move(g));
  return found;
}

} // namespace subcount
