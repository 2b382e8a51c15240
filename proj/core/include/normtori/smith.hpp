#pragma once

#include <cstdint>
#include <vector>

namespace normtori {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r
/// nonnegative. Entries are int64 with overflow checks.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  std::vector<std::int64_t> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& A);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace normtori
