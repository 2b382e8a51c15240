#pragma once

// Small seeded generators shared by the property tests.

#include <cstdint>
#include <vector>

#include "normtori/laurent_series.hpp"

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t m) { return next() % m; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  std::uint32_t unit(std::uint32_t q) { return 1 + static_cast<std::uint32_t>(below(q - 1)); }

 private:
  std::uint64_t s_;
};

/// Nonzero series with the given valuation and `prec` random coefficients.
inline normtori::LaurentSeries series(Rng& r, std::uint32_t q, int val, int prec) {
  std::vector<std::uint32_t> c(prec);
  c[0] = r.unit(q);
  for (int i = 1; i < prec; ++i) c[i] = static_cast<std::uint32_t>(r.below(q));
  return {q, val, c};
}

/// 1 + (random terms of positive valuation).
inline normtori::LaurentSeries one_unit(Rng& r, std::uint32_t q, int prec) {
  std::vector<std::uint32_t> c(prec);
  c[0] = 1;
  for (int i = 1; i < prec; ++i) c[i] = static_cast<std::uint32_t>(r.below(q));
  return {q, 0, c};
}

}  // namespace testgen
