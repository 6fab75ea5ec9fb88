#ifndef SUBCOUNT_NUMTHEORY_HPP
#define SUBCOUNT_NUMTHEORY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace subcount {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial division; n must be >= 1.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);

/// Number of distinct primes dividing n. Throws Error(Domain) for n < 2.
std::uint32_t distinct_prime_count(std::uint64_t n);

/// Returns (p, f) with p^f == q when q is a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_decompose(std::uint64_t q);

bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint32_t p_adic_valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative order of a modulo m; a must be a unit mod m.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Exact rational in lowest terms with positive denominator. Arithmetic
/// throws Error(InternalInconsistency) on 64-bit overflow.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  std::string to_string() const;

private:
  void normalize();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

/// c * 2^e for any integer e, as an exact rational.
ExactRational scaled_power_of_two(std::int64_t c, std::int64_t e);

} // namespace subcount

#endif // SUBCOUNT_NUMTHEORY_HPP
