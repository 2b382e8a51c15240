#pragma once

#include <cstdint>

// Bare modular arithmetic on residues in [0, q); callers guarantee q prime.
namespace normtori::zq {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t q) noexcept {
  std::uint32_t s = a + b;
  return s >= q ? s - q : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t q) noexcept {
  return a >= b ? a - b : a + q - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t q) noexcept { return a == 0 ? 0 : q - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t q) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
}
inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t q) noexcept {
  std::uint64_t r = 1 % q, b = a % q;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}
/// a must be nonzero.
inline std::uint32_t inv(std::uint32_t a, std::uint32_t q) noexcept { return pow(a, q - 2, q); }
inline std::uint32_t reduce(std::int64_t v, std::uint32_t q) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q);
  return static_cast<std::uint32_t>(r < 0 ? r + q : r);
}

}  // namespace normtori::zq
