#ifndef SUBCOUNT_FINITE_FIELD_HPP
#define SUBCOUNT_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace subcount {

/// Polynomial over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

/// Monic irreducibility over F_p: root test for degree <= 3, otherwise
/// gcd(x^(p^i) - x, f) == 1 for every i <= deg/2.
bool is_irreducible(const Poly& f, std::uint64_t p);

/// GF(p^f). Elements are encoded as integers sum c_i p^i in [0, q), so 0 and
/// 1 are the additive and multiplicative identities. The modulus is the
/// first monic irreducible of degree f in lexicographic order of
/// (c_{f-1}, ..., c_0).
class FiniteField {
public:
  /// Throws Error(NotPrimePower).
  explicit FiniteField(std::uint64_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return f_; }
  std::uint32_t size() const noexcept { return q_; }
  const Poly& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

private:
  std::uint32_t p_;
  std::uint32_t f_;
  std::uint32_t q_;
  Poly modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

} // namespace subcount

#endif // SUBCOUNT_FINITE_FIELD_HPP
