#include "normtori/branch.hpp"

#include <numeric>
#include <set>

#include "normtori/errors.hpp"

namespace normtori {

BranchShape classify_branch(const std::vector<ClassVector>& radicands, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  // Enumerate the span; the branch model has at most three coordinates mod n.
  std::set<ClassVector> span{{0, 0, 0}};
  for (const auto& r : radicands) {
    std::set<ClassVector> next;
    for (const auto& s : span)
      for (std::uint64_t k = 0; k < n; ++k)
        next.insert({(s[0] + k * r[0]) % n, (s[1] + k * r[1]) % n, (s[2] + k * r[2]) % n});
    span = std::move(next);
  }
  auto order = [&](const ClassVector& v) {
    return n / std::gcd(std::gcd(std::gcd(v[0], v[1]), v[2]), static_cast<std::uint64_t>(n));
  };
  BranchShape shape;
  std::uint64_t ram = n;
  std::size_t units = 0;
  bool unit_cyclic = false;
  for (const auto& s : span) {
    ram = std::gcd(ram, s[0]);
    shape.cyclic = shape.cyclic || order(s) == span.size();
    if (s[0] != 0) continue;
    ++units;
    unit_cyclic = unit_cyclic || order(s) == n;
  }
  shape.uniformizer = ram != n;
  if (units > 1) {
    const bool full = units == n && unit_cyclic && (!shape.uniformizer || ram == 1);
    shape.unit = full ? UnitRadicand::Independent : UnitRadicand::Dependent;
  }
  return shape;
}

std::uint32_t rho_order_in_branch(const BranchShape& shape, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  // Cyclic (including trivial): the norm-one torus is rational, rho is R-trivial.
  if (shape.cyclic || (!shape.uniformizer && shape.unit == UnitRadicand::None)) return 1;
  // F_b(n-th root of v pi_j, n-th root of u): rho^t is R-trivial iff n | t.
  if (shape.uniformizer && shape.unit == UnitRadicand::Independent) return n;
  throw Error(ErrorKind::UnsupportedShape, "the order of rho is not determined for this non-cyclic branch shape");
}

RhoPowerWitness rho_power_witness(const PrimeField& field, std::uint32_t n, std::uint32_t u, int precision) {
  const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
  if ((field.q() - 1) % n2 != 0) throw Error(ErrorKind::IncompatibleModulus, "q != 1 mod n^2; no primitive n^2-th root of unity");
  if (nth_power_test(field, u, n)) throw Error(ErrorKind::InvalidArgument, "unit radicand is an n-th power");
  CyclicKummerLocal ext(field, LaurentSeries::constant(field.q(), u, precision), n);
  const std::uint32_t rho = primitive_root_of_unity(field, n2);
  const std::uint32_t target = field.pow(rho, n);
  std::int64_t k = 0;
  for (std::uint32_t p = 1; p != target; p = field.mul(p, ext.rho())) ++k;
  return {ext, k, ext.y_power(1), rho};
}

}  // namespace normtori
