#pragma once

#include <cstdint>
#include <vector>

namespace normtori {

/// The prime field F_q, q < 2^31. Stores the factorization of q-1 and the
/// smallest primitive root, which fixes every discrete-log coordinate below.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t generator() const noexcept { return generator_; }
  const std::vector<std::uint32_t>& group_order_primes() const noexcept { return primes_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// Maps an arbitrary integer into [0, q).
  std::uint32_t reduce(std::int64_t v) const noexcept;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(std::uint32_t a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.q_ == b.q_; }

 private:
  std::uint32_t q_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> primes_;
};

/// A value of F_q together with its modulus.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t value)
      : value_(field.reduce(value)), q_(field.q()) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return q_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t q_;
};

bool is_prime(std::uint64_t v) noexcept;

/// True iff a is an n-th power in F_q^*. Requires a != 0 and n | q-1.
bool nth_power_test(const PrimeField& field, std::uint32_t a, std::uint64_t n);
bool nth_power_test(const FieldElement& a, const PrimeField& field, std::uint64_t n);

/// Smallest element of exact multiplicative order m. Requires m | q-1.
std::uint32_t primitive_root_of_unity(const PrimeField& field, std::uint64_t m);

/// Discrete log of a with respect to field.generator(), reduced mod n.
/// Requires a != 0 and n | q-1.
std::uint64_t unit_class(const PrimeField& field, std::uint32_t a, std::uint64_t n);

/// n-th power test for an arbitrary exponent coprime to q (no divisibility
/// requirement): a is an n-th power iff a^((q-1)/gcd(n,q-1)) = 1.
bool is_power_any_exponent(const PrimeField& field, std::uint32_t a, std::uint64_t n);

}  // namespace normtori
