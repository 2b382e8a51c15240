#pragma once

#include <string>
#include <vector>

namespace normtori {

/// Elements of Z/m are {k}; elements of S_k are permutations of 0..k-1,
/// composed right to left: (a*b)(i) = a(b(i)).
using GroupElement = std::vector<int>;

class GroupSpec {
 public:
  enum class Kind { Cyclic, Symmetric };

  static GroupSpec cyclic(int m);
  static GroupSpec symmetric(int k);
  /// "zmod:<m>" or "sym:<k>".
  static GroupSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  int size_parameter() const noexcept { return param_; }
  std::string to_string() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  /// Throws InvalidArgument unless a is a well-formed element.
  void validate(const GroupElement& a) const;

 private:
  GroupSpec(Kind kind, int param) : kind_(kind), param_(param) {}
  Kind kind_;
  int param_;
};

}  // namespace normtori
