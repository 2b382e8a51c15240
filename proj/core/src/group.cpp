#include "normtori/group.hpp"

#include <algorithm>
#include <charconv>

#include "normtori/errors.hpp"

namespace normtori {

GroupSpec GroupSpec::cyclic(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be at least 1");
  return GroupSpec(Kind::Cyclic, m);
}

GroupSpec GroupSpec::symmetric(int k) {
  if (k < 1 || k > 12) throw Error(ErrorKind::InvalidArgument, "symmetric group degree must be in [1, 12]");
  return GroupSpec(Kind::Symmetric, k);
}

GroupSpec GroupSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "group must look like zmod:<m> or sym:<k>");
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw Error(ErrorKind::ParseError, "column " + std::to_string(colon + 2) + ": expected an integer after ':'");
  if (kind == "zmod") return cyclic(v);
  if (kind == "sym") return symmetric(v);
  throw Error(ErrorKind::ParseError, "column 1: unknown group kind '" + kind + "'");
}

std::string GroupSpec::to_string() const {
  return (kind_ == Kind::Cyclic ? "zmod:" : "sym:") + std::to_string(param_);
}

GroupElement GroupSpec::identity() const {
  if (kind_ == Kind::Cyclic) return {0};
  GroupElement p(static_cast<std::size_t>(param_));
  for (int i = 0; i < param_; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

void GroupSpec::validate(const GroupElement& a) const {
  if (kind_ == Kind::Cyclic) {
    if (a.size() != 1 || a[0] < 0 || a[0] >= param_)
      throw Error(ErrorKind::InvalidArgument, "element of Z/" + std::to_string(param_) + " must be a single residue");
    return;
  }
  if (a.size() != static_cast<std::size_t>(param_)) throw Error(ErrorKind::InvalidArgument, "permutation has wrong length");
  std::vector<int> s = a;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < param_; ++i)
    if (s[static_cast<std::size_t>(i)] != i) throw Error(ErrorKind::InvalidArgument, "not a permutation of 0.." + std::to_string(param_ - 1));
}

GroupElement GroupSpec::multiply(const GroupElement& a, const GroupElement& b) const {
  if (kind_ == Kind::Cyclic) return {(a[0] + b[0]) % param_};
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

GroupElement GroupSpec::inverse(const GroupElement& a) const {
  if (kind_ == Kind::Cyclic) return {(param_ - a[0]) % param_};
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

}  // namespace normtori
