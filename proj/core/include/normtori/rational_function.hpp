#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normtori/finite_field.hpp"

namespace normtori {

/// Polynomial in x, y over F_q; terms keyed by (deg_x, deg_y), zero terms dropped.
class Poly2 {
 public:
  explicit Poly2(std::uint32_t q) : q_(q) {}
  static Poly2 constant(std::uint32_t q, std::int64_t c);
  static Poly2 x(std::uint32_t q);
  static Poly2 y(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  const std::map<std::pair<int, int>, std::uint32_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 pow(unsigned e) const;

  std::uint32_t evaluate(std::uint32_t a, std::uint32_t b) const;
  std::string to_string() const;

 private:
  void add_term(int i, int j, std::uint32_t c);
  std::uint32_t q_;
  std::map<std::pair<int, int>, std::uint32_t> terms_;
};

/// Univariate polynomial, coefficient of s^i at index i, trailing zeros trimmed.
using Poly1 = std::vector<std::uint32_t>;

/// Substitutes x = ax*s + bx, y = ay*s + by.
Poly1 substitute_line(const Poly2& p, std::uint32_t ax, std::uint32_t bx, std::uint32_t ay, std::uint32_t by);

struct RationalFunction {
  Poly2 num;
  Poly2 den;
};

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);

/// Infix over x, y with + - * / ^ (nonnegative integer exponents) and parentheses.
RationalFunction parse_rational_function(std::string_view text, std::uint32_t q);

/// f(a, b); throws PoleAtPoint when the denominator vanishes there.
std::uint32_t rational_point_residue(const RationalFunction& f, std::uint32_t a, std::uint32_t b);

/// A line alpha x + beta y + gamma = 0 in the affine plane.
struct Line {
  std::uint32_t alpha, beta, gamma;
};

/// Reads a degree-one polynomial as a line; InvalidArgument otherwise.
Line line_of(const Poly2& p);

/// If f restricted to the line is a constant c (denominator not identically
/// zero there), returns true and sets c.
bool restriction_is_constant(const RationalFunction& f, const Line& l, std::uint32_t& c);

}  // namespace normtori
