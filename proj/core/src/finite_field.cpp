#include "normtori/finite_field.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "normtori/errors.hpp"

namespace normtori {

namespace {

std::vector<std::uint32_t> distinct_prime_factors(std::uint64_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(static_cast<std::uint32_t>(v));
  return out;
}

void require_divides_group_order(const PrimeField& field, std::uint64_t n) {
  if (n == 0 || (field.q() - 1) % n != 0) {
    throw Error(ErrorKind::IncompatibleModulus,
                std::to_string(n) + " does not divide q-1 = " + std::to_string(field.q() - 1));
  }
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 31) || !is_prime(q)) {
    throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime below 2^31");
  }
  primes_ = distinct_prime_factors(q - 1);
  if (q == 2) {
    generator_ = 1;
    return;
  }
  for (std::uint32_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (auto p : primes_) {
      if (pow(g, (q - 1) / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint64_t result = 1 % q_;
  std::uint64_t base = a % q_;
  auto exp = static_cast<std::uint64_t>(e);
  while (exp > 0) {
    if (exp & 1) result = result * base % q_;
    base = base * base % q_;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw Error(ErrorKind::ZeroInput, "inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<std::uint32_t>(r);
}

std::uint64_t PrimeField::order(std::uint32_t a) const {
  if (a % q_ == 0) throw Error(ErrorKind::ZeroInput, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (auto p : primes_) {
    while (ord % p == 0 && pow(a, static_cast<std::int64_t>(ord / p)) == 1) ord /= p;
  }
  return ord;
}

bool nth_power_test(const PrimeField& field, std::uint32_t a, std::uint64_t n) {
  if (a % field.q() == 0) throw Error(ErrorKind::ZeroInput, "nth_power_test of zero");
  require_divides_group_order(field, n);
  return field.pow(a, static_cast<std::int64_t>((field.q() - 1) / n)) == 1;
}

bool nth_power_test(const FieldElement& a, const PrimeField& field, std::uint64_t n) {
  return nth_power_test(field, a.value(), n);
}

bool is_power_any_exponent(const PrimeField& field, std::uint32_t a, std::uint64_t n) {
  if (a % field.q() == 0) throw Error(ErrorKind::ZeroInput, "power test of zero");
  std::uint64_t g = std::gcd<std::uint64_t>(n, field.q() - 1);
  return field.pow(a, static_cast<std::int64_t>((field.q() - 1) / g)) == 1;
}

std::uint32_t primitive_root_of_unity(const PrimeField& field, std::uint64_t m) {
  require_divides_group_order(field, m);
  if (m == 1) return 1;
  // Elements of order m are exactly g^(k(q-1)/m) with gcd(k, m) = 1; pick the smallest value.
  std::uint32_t base = field.pow(field.generator(), static_cast<std::int64_t>((field.q() - 1) / m));
  std::uint32_t best = field.q();
  std::uint32_t cur = 1;
  for (std::uint64_t k = 1; k < m; ++k) {
    cur = field.mul(cur, base);
    if (std::gcd(k, m) == 1 && cur < best) best = cur;
  }
  return best;
}

std::uint64_t unit_class(const PrimeField& field, std::uint32_t a, std::uint64_t n) {
  if (a % field.q() == 0) throw Error(ErrorKind::ZeroInput, "unit_class of zero");
  require_divides_group_order(field, n);
  if (n == 1) return 0;
  const auto cofactor = static_cast<std::int64_t>((field.q() - 1) / n);
  std::uint32_t target = field.pow(a, cofactor);
  std::uint32_t omega = field.pow(field.generator(), cofactor);
  if (n <= (1u << 16)) {
    std::uint32_t cur = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (cur == target) return k;
      cur = field.mul(cur, omega);
    }
  } else {
    // baby-step giant-step inside the cyclic group generated by omega
    auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::unordered_map<std::uint32_t, std::uint64_t> baby;
    std::uint32_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
      baby.emplace(cur, j);
      cur = field.mul(cur, omega);
    }
    std::uint32_t giant = field.inv(field.pow(omega, static_cast<std::int64_t>(m)));
    std::uint32_t gamma = target;
    for (std::uint64_t i = 0; i <= m; ++i) {
      auto it = baby.find(gamma);
      if (it != baby.end()) return (i * m + it->second) % n;
      gamma = field.mul(gamma, giant);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "discrete log not found");
}

}  // namespace normtori
