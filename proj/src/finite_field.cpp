#include "subcount/finite_field.hpp"

#include "subcount/errors.hpp"
#include "subcount/numtheory.hpp"

namespace subcount {

namespace {

void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p)
{
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = pow_mod(m.back(), p - 2, p);
  while (a.size() > dm) {
    std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - mul_mod(c, m[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p)
{
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = (mul_mod(acc, x, p) + *it) % p;
  return acc;
}

} // namespace

bool is_irreducible(const Poly& f, std::uint64_t p)
{
  Poly g = f;
  trim(g);
  if (g.size() < 2)
    return false;
  const std::size_t deg = g.size() - 1;
  if (deg == 1)
    return true;
  if (deg <= 3) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (eval(g, x, p) == 0)
        return false;
    return true;
  }
  // x^(p^i) mod g by repeated p-th powering
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    Poly acc{1};
    Poly base = xp;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1U)
        acc = poly_mulmod(acc, base, g, p);
      base = poly_mulmod(base, base, g, p);
    }
    xp = acc;
    Poly diff = xp;
    if (diff.size() < 2)
      diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(g, diff, p).size() > 1)
      return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t q)
{
  auto pf = prime_power_decompose(q);
  if (!pf)
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > 4096)
    throw Error(ErrorCode::Domain, "field size " + std::to_string(q) + " too large for table arithmetic");
  p_ = static_cast<std::uint32_t>(pf->first);
  f_ = pf->second;
  q_ = static_cast<std::uint32_t>(q);

  if (f_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t code = 0; code < q; ++code) {
      Poly cand(f_ + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < f_; ++i) {
        cand[i] = c % p_;
        c /= p_;
      }
      cand[f_] = 1;
      if (is_irreducible(cand, p_)) {
        modulus_ = std::move(cand);
        break;
      }
    }
    if (modulus_.empty())
      throw Error(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
  }

  auto decode = [&](std::uint32_t e) {
    Poly a(f_, 0);
    for (std::uint32_t i = 0; i < f_; ++i) {
      a[i] = e % p_;
      e /= p_;
    }
    return a;
  };
  auto encode = [&](const Poly& a) {
    std::uint32_t e = 0;
    for (std::size_t i = a.size(); i-- > 0;)
      e = e * p_ + static_cast<std::uint32_t>(a[i]);
    return e;
  };

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = decode(a);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = decode(b);
      Poly s(f_);
      for (std::uint32_t i = 0; i < f_; ++i)
        s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = encode(s);
      Poly m = f_ == 1 ? Poly{mul_mod(pa[0], pb[0], p_)} : poly_mulmod(pa, pb, modulus_, p_);
      m.resize(f_, 0);
      mul_[a * q_ + b] = encode(m);
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a)
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add(a, b) == 0)
        neg_[a] = b;
      if (mul(a, b) == 1)
        inv_[a] = b;
    }
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const noexcept
{
  std::uint32_t r = 1;
  while (e > 0) {
    if (e & 1U)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

} // namespace subcount
