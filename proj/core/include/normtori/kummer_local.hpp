#pragma once

#include <cstdint>
#include <vector>

#include "normtori/finite_field.hpp"
#include "normtori/laurent_series.hpp"

namespace normtori {

/// c_0 + c_1 y + ... + c_{n-1} y^{n-1} in F[y]/(y^n - a).
struct ExtElement {
  std::vector<LaurentSeries> coords;
};

/// L = F(y), y^n = a, over F = F_q((t)) with n | q-1. The generator of the
/// Galois group acts by y -> rho_n y, rho_n = primitive_root_of_unity(q, n).
/// L need not be a field; element arithmetic works in the algebra regardless.
class CyclicKummerLocal {
 public:
  CyclicKummerLocal(const PrimeField& field, LaurentSeries a, std::uint32_t n);

  const PrimeField& field() const noexcept { return field_; }
  const LaurentSeries& radicand() const noexcept { return a_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t rho() const noexcept { return rho_; }
  int precision() const noexcept { return a_.precision(); }

  /// True iff the class of a in F*/F*^n has order n.
  bool is_field() const;

  ExtElement scalar(const LaurentSeries& c) const;
  ExtElement scalar(std::int64_t c) const;
  ExtElement one() const { return scalar(1); }
  /// y^k.
  ExtElement y_power(int k) const;

  ExtElement add(const ExtElement& x, const ExtElement& z) const;
  ExtElement sub(const ExtElement& x, const ExtElement& z) const;
  ExtElement mul(const ExtElement& x, const ExtElement& z) const;
  ExtElement scale(const ExtElement& x, const LaurentSeries& c) const;
  ExtElement pow(const ExtElement& x, std::int64_t e) const;
  /// sigma^k, acting by y -> rho_n^k y.
  ExtElement sigma(const ExtElement& x, std::int64_t k) const;
  ExtElement inverse(const ExtElement& x) const;
  bool approx_equal(const ExtElement& x, const ExtElement& z) const;
  bool is_scalar(const ExtElement& x) const;

 private:
  void check(const ExtElement& x) const;

  PrimeField field_;
  LaurentSeries a_;
  std::uint32_t n_;
  std::uint32_t rho_;
};

/// N_{L/F}(x) as the product of the conjugates of x.
LaurentSeries norm_cyclic(const CyclicKummerLocal& ext, const ExtElement& x);

/// Class in Z/n of the residue of (-1)^{v(f)v(g)} f^{v(g)} g^{-v(f)}.
std::uint64_t tame_symbol(const PrimeField& field, const LaurentSeries& f, const LaurentSeries& g, std::uint64_t n);

/// lambda is a norm from L iff the tame symbol (a, lambda) is trivial.
bool is_norm_cyclic(const CyclicKummerLocal& ext, const LaurentSeries& lambda);

}  // namespace normtori
