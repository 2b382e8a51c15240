#pragma once

#include <cstdint>
#include <vector>

#include "normtori/kummer_local.hpp"

namespace normtori {

/// sigma^k(b) / b.
struct RWitnessPair {
  std::int64_t k;
  ExtElement b;
};
using RWitness = std::vector<RWitnessPair>;

/// Product over the pairs of sigma^k(b)/b; the empty witness recomposes to 1.
ExtElement recompose_witness(const CyclicKummerLocal& ext, const RWitness& w);

/// N(alpha)^{-1} alpha^n = prod_{k=1}^{n-1} sigma^k(alpha^{-1}) / alpha^{-1}.
/// Empty when alpha is a scalar, where both sides are 1.
RWitness nth_power_r_witness(const CyclicKummerLocal& ext, const ExtElement& alpha);

/// True iff z lies in 1 + (maximal ideal of L). L must be a field.
bool has_residue_one(const CyclicKummerLocal& ext, const ExtElement& z);

struct ResidueOneDecomposition {
  ExtElement root;  // w with w^n = z, N(w) = 1, residue 1
  RWitness witness; // recomposes to z
};

/// z of norm 1 and residue 1 is an n-th power of a norm-one element, hence R-trivial.
ResidueOneDecomposition r_trivial_from_residue_one(const CyclicKummerLocal& ext, const ExtElement& z);

enum class BaseKind { Finite, AlgebraicallyClosed };
enum class GaloisShape { Cyclic, Bicyclic };

/// Ramification index e and residue degree f of one step of the residue tower.
struct TowerLevel {
  std::uint32_t e;
  std::uint32_t f;
  friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

/// Levels[0] describes L (x) F / F; level i+1 describes the residue
/// extension of level i over its own complete residue field, so
/// e_{i+1} f_{i+1} = f_i. A level with e f < n stands for a product of copies.
struct TowerDescriptor {
  BaseKind base = BaseKind::Finite;
  std::uint32_t q = 0;  // meaningful for a finite base
  std::uint32_t n = 1;
  std::vector<TowerLevel> levels;
  GaloisShape galois = GaloisShape::Cyclic;
};

void validate_tower(const TowerDescriptor& tower);

/// The one-level tower of a cyclic Kummer field extension.
TowerDescriptor tower_of(const CyclicKummerLocal& ext);

/// Order of the class of the relevant root of unity in T(F)/RT(F).
std::uint32_t torus_quotient_order(const TowerDescriptor& tower);

struct RDecomposition {
  std::uint32_t j;  // exponent of rho_n read off the residue norm, in [0, e)
  RWitness witness;
  /// The same element with j reduced mod torus_quotient_order: the surplus
  /// power of rho_n = sigma(y)/y is moved into the witness.
  std::uint32_t j_reduced;
  RWitness reduced_witness;
};

/// Writes a norm-one x as rho_n^j times an explicit R-trivial product.
RDecomposition r_trivial_decompose(const CyclicKummerLocal& ext, const ExtElement& x, const TowerDescriptor& tower);

}  // namespace normtori
