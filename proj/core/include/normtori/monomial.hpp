#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "normtori/finite_field.hpp"

namespace normtori {

/// u * pi1^e1 * pi2^e2 with u a nonzero residue (a Teichmuller-style unit).
struct MonomialClass {
  std::uint32_t u = 1;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  friend bool operator==(const MonomialClass&, const MonomialClass&) = default;
};

MonomialClass monomial_mul(const PrimeField& field, const MonomialClass& a, const MonomialClass& b);
MonomialClass monomial_pow(const PrimeField& field, const MonomialClass& a, std::int64_t k);
std::string to_string(const MonomialClass& m);

/// Parses `u:<int> e1:<int> e2:<int>` (fields in any order, all required).
MonomialClass parse_monomial(const std::string& text, const PrimeField& field);

/// n | e1, n | e2 and u is an n-th power. Requires n | q-1.
bool is_nth_power_monomial(const PrimeField& field, const MonomialClass& x, std::uint64_t n);

/// e/l when l divides e, else e.
std::uint64_t ramification_after_root(std::uint64_t e, std::uint64_t ell);

/// Coordinates (e1, e2, unit class) of a monomial in (Z/n)^3.
using ClassVector = std::array<std::uint64_t, 3>;

/// F(n-th roots of gens) over the fraction field of a 2-dimensional complete
/// regular local ring. The generators must be independent modulo n-th powers.
class MonomialKummer {
 public:
  MonomialKummer(const PrimeField& field, std::uint32_t n, std::vector<MonomialClass> gens);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t n() const noexcept { return n_; }
  const std::vector<MonomialClass>& gens() const noexcept { return gens_; }
  /// n^{#gens}.
  std::uint64_t degree() const noexcept { return degree_; }
  ClassVector class_of(const MonomialClass& m) const;
  /// The monomial with the given class vector and unit g^c.
  MonomialClass from_class(const ClassVector& v) const;

 private:
  PrimeField field_;
  std::uint32_t n_;
  std::vector<MonomialClass> gens_;
  std::uint64_t degree_;
};

/// A tower element together with its expression in the input generators.
struct TowerRadicand {
  MonomialClass radicand;
  std::vector<std::uint64_t> exponents;  // product of gens[i]^exponents[i], modulo n-th powers
};

/// F <= L1 <= L2 <= L where L1 = F(n-th roots of l1_gens) is unramified,
/// L2 = L1(n-th root of l2_radicand) with l2_radicand = u pi1^{n/d1}, and
/// L = L2(n-th root of l3_radicand) with l3_radicand = v pi1^r pi2^{n/d2}.
/// The exponent i of the root of u pi1 entering the last radicand is i_exp.
struct KummerTower {
  std::vector<TowerRadicand> l1_gens;
  std::uint64_t l1_degree = 1;
  std::uint64_t d1 = 1;
  TowerRadicand l2_radicand;
  std::uint64_t d2 = 1;
  std::uint64_t i_exp = 0;
  TowerRadicand l3_radicand;
};

KummerTower kummer_decompose(const MonomialKummer& K);

/// One step of a norm descent: the norm of a monomial element of L raised to a power.
struct NormFactor {
  std::string source;    // "root(i)" for the n-th root of gens[i], "unit" for a unit norm
  MonomialClass norm;    // N_{L/F} of the source element
  std::uint64_t power;
};

struct NormDescentResult {
  bool is_norm = false;
  std::vector<NormFactor> trail;
  /// lambda divided by the trail; an N-th power (N = [L:F]) when is_norm.
  MonomialClass residual;
};

/// Decides whether lambda is a norm from L within the monomial model.
NormDescentResult norm_descent_2dim(const MonomialKummer& K, const MonomialClass& lambda);

}  // namespace normtori
