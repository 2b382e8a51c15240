#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace normtori {

inline constexpr int kDefaultPrecision = 16;

/// A truncated Laurent series over F_q: c_0 t^v + c_1 t^(v+1) + ... + O(t^(v+prec)).
///
/// A nonzero series has c_0 != 0 and relative precision prec = coeffs.size().
/// A series whose known terms all vanish is "zero to precision" and only
/// remembers its absolute precision N (it is O(t^N)); asking for its
/// valuation raises PrecisionExhausted. Arithmetic never invents terms: sums
/// keep the smaller absolute precision and products the smaller relative one.
class LaurentSeries {
 public:
  /// Normalizes leading zeros away; each stripped zero costs one term of precision.
  LaurentSeries(std::uint32_t q, int valuation, std::vector<std::uint32_t> coeffs);

  static LaurentSeries zero(std::uint32_t q, int absolute_precision);
  static LaurentSeries constant(std::uint32_t q, std::int64_t c, int precision = kDefaultPrecision);
  /// c * t^k with the given relative precision.
  static LaurentSeries monomial(std::uint32_t q, std::int64_t c, int k, int precision = kDefaultPrecision);

  std::uint32_t modulus() const noexcept { return q_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int valuation() const;
  int precision() const noexcept { return static_cast<int>(coeffs_.size()); }
  int absolute_precision() const noexcept { return val_ + precision(); }
  /// Leading coefficient (the residue of t^-v x).
  std::uint32_t leading() const;
  /// Coefficient of t^k; throws PrecisionExhausted past the known window.
  std::uint32_t coeff(int k) const;
  const std::vector<std::uint32_t>& coefficients() const noexcept { return coeffs_; }

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.inverse();
  }

  LaurentSeries inverse() const;
  LaurentSeries pow(std::int64_t e) const;
  LaurentSeries scaled(std::uint32_t c) const;
  /// Multiplies by t^k.
  LaurentSeries shifted(int k) const;
  /// Keeps at most `precision` terms.
  LaurentSeries truncated(int precision) const;

  std::string to_string() const;

 private:
  LaurentSeries(std::uint32_t q, int abs_prec) : q_(q), val_(abs_prec) {}
  void normalize();

  std::uint32_t q_;
  int val_;
  std::vector<std::uint32_t> coeffs_;
};

/// a == b to the precision both are known at.
bool approx_equal(const LaurentSeries& a, const LaurentSeries& b);

/// The n-th root w with residue 1 of a series z with valuation 0 and residue 1.
/// Output precision equals input precision.
LaurentSeries hensel_nth_root(const LaurentSeries& z, std::uint64_t n);

/// Parses `term (('+'|'-') term)*`, term = [coeff '*'] 't' ['^' int] | coeff.
/// Coefficients are integers reduced mod q. Throws ParseError with the column.
LaurentSeries parse_series(std::string_view text, std::uint32_t q, int precision = kDefaultPrecision);

}  // namespace normtori
