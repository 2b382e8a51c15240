#pragma once

#include <cstdint>
#include <vector>

#include "normtori/laurent_series.hpp"

namespace normtori {

/// sum_i c_i pi1^{v1+i} with c_i Laurent series in pi2: an element of the
/// completion at pi1, truncated to a rectangular window.
class BiLocalElement {
 public:
  BiLocalElement(std::uint32_t q, int v1, std::vector<LaurentSeries> coeffs);

  /// c * pi1^s * pi2^t with prec1 terms in pi1 and prec2 terms in pi2.
  static BiLocalElement monomial(std::uint32_t q, std::int64_t c, int s, int t, int prec1, int prec2);
  /// Embeds a pi2-series as a pi1-constant.
  static BiLocalElement from_pi2_series(const LaurentSeries& c, int prec1);

  std::uint32_t modulus() const noexcept { return q_; }
  int pi1_valuation() const;
  int pi1_precision() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<LaurentSeries>& coefficients() const noexcept { return coeffs_; }

  BiLocalElement operator*(const BiLocalElement& o) const;
  BiLocalElement operator+(const BiLocalElement& o) const;
  BiLocalElement pow(std::uint64_t e) const;
  BiLocalElement scaled(const LaurentSeries& c) const;

 private:
  void normalize();

  std::uint32_t q_;
  int v1_;
  std::vector<LaurentSeries> coeffs_;
};

/// Both elements agree on the window where both are known.
bool approx_equal(const BiLocalElement& a, const BiLocalElement& b);

struct MonomialNormalForm {
  std::uint32_t u;
  int s;
  int t;
  BiLocalElement b;
};

/// x = u pi1^s pi2^t b^m with b of residue 1, by Hensel lifting in pi1.
MonomialNormalForm monomial_normal_form(const BiLocalElement& x, std::uint64_t m);

/// u pi1^s pi2^t b^m, for checking a normal form against its input.
BiLocalElement recompose_normal_form(const MonomialNormalForm& nf, std::uint64_t m);

}  // namespace normtori
