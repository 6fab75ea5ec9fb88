#include "subcount/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "subcount/errors.hpp"

namespace subcount {

const char* error_code_name(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::Domain: return "DomainError";
  case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
  case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
  case ErrorCode::IsomorphismCapExceeded: return "IsomorphismCapExceeded";
  case ErrorCode::InvalidPermutation: return "InvalidPermutation";
  case ErrorCode::InvalidTable: return "InvalidTable";
  case ErrorCode::InvalidAction: return "InvalidAction";
  case ErrorCode::NotPrimePower: return "NotPrimePower";
  case ErrorCode::NotSquarefree: return "NotSquarefree";
  case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
  case ErrorCode::SizeMismatch: return "SizeMismatch";
  case ErrorCode::Parse: return "ParseError";
  case ErrorCode::Format: return "FormatError";
  case ErrorCode::Io: return "IoError";
  case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Error";
}

Factorization factorize(std::uint64_t n)
{
  if (n == 0)
    throw Error(ErrorCode::Domain, "factorize: n must be >= 1");

  Factorization result;
  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0)
      result.push_back({p, e});
  };

  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1)
    result.push_back({n, 1});
  return result;
}

std::uint64_t euler_phi(std::uint64_t n)
{
  std::uint64_t phi = 1;
  for (auto [p, e] : factorize(n)) {
    phi *= p - 1;
    for (std::uint32_t i = 1; i < e; ++i)
      phi *= p;
  }
  return phi;
}

std::uint64_t divisor_count(std::uint64_t n)
{
  std::uint64_t d = 1;
  for (auto const& pe : factorize(n))
    d *= pe.exponent + 1;
  return d;
}

std::uint32_t distinct_prime_count(std::uint64_t n)
{
  if (n < 2)
    throw Error(ErrorCode::Domain, "distinct_prime_count: undefined for n < 2");
  return static_cast<std::uint32_t>(factorize(n).size());
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_decompose(std::uint64_t q)
{
  if (q < 2)
    return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1)
    return std::nullopt;
  return std::make_pair(f[0].prime, f[0].exponent);
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

bool is_squarefree(std::uint64_t n)
{
  if (n == 0)
    return false;
  for (auto const& pe : factorize(n))
    if (pe.exponent > 1)
      return false;
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> result{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t base = result.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint32_t p_adic_valuation(std::uint64_t n, std::uint64_t p)
{
  std::uint32_t v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
  if (m == 1)
    return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m)
{
  if (m == 1)
    return 1;
  if (std::gcd(a % m, m) != 1)
    throw Error(ErrorCode::Domain, "multiplicative_order: not a unit");
  // the order divides phi(m); take the smallest divisor that works
  for (auto d : divisors(euler_phi(m)))
    if (pow_mod(a, d, m) == 1)
      return d;
  throw Error(ErrorCode::InternalInconsistency, "multiplicative_order: no divisor of phi(m) works");
}

namespace {

std::int64_t checked(__int128 v)
{
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorCode::InternalInconsistency, "ExactRational overflow");
  return static_cast<std::int64_t>(v);
}

} // namespace

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator)
  : num_(numerator), den_(denominator)
{
  if (den_ == 0)
    throw Error(ErrorCode::Domain, "ExactRational: zero denominator");
  normalize();
}

void ExactRational::normalize()
{
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  auto g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs)
{
  auto g = std::gcd(den_, rhs.den_);
  __int128 lhs_scale = rhs.den_ / g;
  __int128 rhs_scale = den_ / g;
  __int128 n = static_cast<__int128>(num_) * lhs_scale + static_cast<__int128>(rhs.num_) * rhs_scale;
  __int128 d = static_cast<__int128>(den_) * lhs_scale;
  // reduce in 128 bits before narrowing
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  num_ = checked(n);
  den_ = checked(d);
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs)
{
  return *this += ExactRational(-rhs.num_, rhs.den_);
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs)
{
  auto g1 = std::gcd(num_, rhs.den_);
  auto g2 = std::gcd(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  num_ = checked(static_cast<__int128>(num_ / g1) * (rhs.num_ / g2));
  den_ = checked(static_cast<__int128>(den_ / g2) * (rhs.den_ / g1));
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
{
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string ExactRational::to_string() const
{
  std::ostringstream os;
  os << num_;
  if (den_ != 1)
    os << '/' << den_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r)
{
  return os << r.to_string();
}

ExactRational scaled_power_of_two(std::int64_t c, std::int64_t e)
{
  if (e >= 62 || e <= -62)
    throw Error(ErrorCode::Domain, "scaled_power_of_two: exponent out of range");
  if (e >= 0)
    return ExactRational(checked(static_cast<__int128>(c) << e));
  return ExactRational(c, std::int64_t{1} << (-e));
}

} // namespace subcount
