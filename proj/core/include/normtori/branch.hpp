#pragma once

#include <cstdint>
#include <vector>

#include "normtori/kummer_local.hpp"
#include "normtori/monomial.hpp"

namespace normtori {

enum class UnitRadicand { None, Independent, Dependent };

/// Shape of L (x) F_b over a branch field F_b, a complete discretely valued
/// field whose residue field is itself complete (parameter pi_k).
struct BranchShape {
  bool cyclic = false;       // the radicand span is cyclic (includes the trivial extension)
  bool uniformizer = false;  // some radicand has a pi_j-exponent prime to the degree
  UnitRadicand unit = UnitRadicand::None;
};

/// Classifies the span of radicand class vectors (a, b, c): a = exponent of the
/// branch uniformizer pi_j, b = exponent of pi_k, c = unit class, all mod n.
/// Independent means the unit part is cyclic of order n and, when a
/// uniformizer radicand is present, it is totally ramified; anything else
/// with a nontrivial unit part is Dependent.
BranchShape classify_branch(const std::vector<ClassVector>& radicands, std::uint32_t n);

/// Order of the class of a primitive n^2-th root of unity rho in T(F_b)/RT(F_b).
std::uint32_t rho_order_in_branch(const BranchShape& shape, std::uint32_t n);

/// rho^n = tau(y)/y in F(y), y^n = u: the automorphism index k (sigma^k = tau)
/// and the extension in which the witness lives.
struct RhoPowerWitness {
  CyclicKummerLocal ext;
  std::int64_t k;
  ExtElement y;
  std::uint32_t rho;  // the primitive n^2-th root of unity
};

/// Requires q = 1 mod n^2 and u a non-n-th power.
RhoPowerWitness rho_power_witness(const PrimeField& field, std::uint32_t n, std::uint32_t u, int precision = kDefaultPrecision);

}  // namespace normtori
