#include "normtori/kummer_local.hpp"

#include <numeric>
#include <optional>

#include "normtori/errors.hpp"

namespace normtori {

CyclicKummerLocal::CyclicKummerLocal(const PrimeField& field, LaurentSeries a, std::uint32_t n)
    : field_(field), a_(std::move(a)), n_(n), rho_(0) {
  if (n_ == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (a_.modulus() != field_.q()) throw Error(ErrorKind::IncompatibleModulus, "radicand lives over a different field");
  if ((field_.q() - 1) % n_ != 0)
    throw Error(ErrorKind::IncompatibleModulus, "degree " + std::to_string(n_) + " does not divide q-1");
  if (a_.is_zero()) throw Error(ErrorKind::ZeroInput, "radicand is zero to precision");
  rho_ = primitive_root_of_unity(field_, n_);
}

bool CyclicKummerLocal::is_field() const {
  // Order of (v mod n, class of the leading unit) in Z/n x Z/n.
  const std::uint64_t v = static_cast<std::uint64_t>(((a_.valuation() % static_cast<int>(n_)) + static_cast<int>(n_)) % static_cast<int>(n_));
  const std::uint64_t c = unit_class(field_, a_.leading(), n_);
  const std::uint64_t g = std::gcd(std::gcd(v, c), static_cast<std::uint64_t>(n_));
  return g == 1;
}

void CyclicKummerLocal::check(const ExtElement& x) const {
  if (x.coords.size() != n_)
    throw Error(ErrorKind::DimensionMismatch, "element has " + std::to_string(x.coords.size()) + " coordinates, expected " + std::to_string(n_));
}

ExtElement CyclicKummerLocal::scalar(const LaurentSeries& c) const {
  ExtElement r;
  r.coords.assign(n_, LaurentSeries::zero(field_.q(), c.absolute_precision()));
  r.coords[0] = c;
  return r;
}

ExtElement CyclicKummerLocal::scalar(std::int64_t c) const {
  return scalar(LaurentSeries::constant(field_.q(), c, precision()));
}

ExtElement CyclicKummerLocal::y_power(int k) const {
  const int nn = static_cast<int>(n_);
  const int quo = k >= 0 ? k / nn : -((-k + nn - 1) / nn);
  const auto rem = static_cast<std::size_t>(k - quo * nn);
  LaurentSeries c = a_.pow(quo);
  ExtElement r;
  r.coords.assign(n_, LaurentSeries::zero(field_.q(), c.absolute_precision()));
  r.coords[rem] = std::move(c);
  return r;
}

ExtElement CyclicKummerLocal::add(const ExtElement& x, const ExtElement& z) const {
  check(x);
  check(z);
  ExtElement r = x;
  for (std::size_t i = 0; i < n_; ++i) r.coords[i] += z.coords[i];
  return r;
}

ExtElement CyclicKummerLocal::sub(const ExtElement& x, const ExtElement& z) const {
  check(x);
  check(z);
  ExtElement r = x;
  for (std::size_t i = 0; i < n_; ++i) r.coords[i] -= z.coords[i];
  return r;
}

ExtElement CyclicKummerLocal::mul(const ExtElement& x, const ExtElement& z) const {
  check(x);
  check(z);
  std::vector<std::optional<LaurentSeries>> acc(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      LaurentSeries p = x.coords[i] * z.coords[j];
      std::size_t k = i + j;
      if (k >= n_) {
        k -= n_;
        p *= a_;
      }
      acc[k] = acc[k] ? *acc[k] + p : p;
    }
  }
  ExtElement r;
  r.coords.reserve(n_);
  for (auto& c : acc) r.coords.push_back(std::move(*c));
  return r;
}

ExtElement CyclicKummerLocal::scale(const ExtElement& x, const LaurentSeries& c) const {
  check(x);
  ExtElement r = x;
  for (auto& v : r.coords) v *= c;
  return r;
}

ExtElement CyclicKummerLocal::pow(const ExtElement& x, std::int64_t e) const {
  if (e < 0) return pow(inverse(x), -e);
  ExtElement acc = one();
  ExtElement base = x;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      acc = first ? base : mul(acc, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

ExtElement CyclicKummerLocal::sigma(const ExtElement& x, std::int64_t k) const {
  check(x);
  const std::int64_t kk = ((k % n_) + n_) % n_;
  const std::uint32_t r = field_.pow(rho_, kk);
  ExtElement out = x;
  std::uint32_t ri = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    out.coords[i] = out.coords[i].scaled(ri);
    ri = field_.mul(ri, r);
  }
  return out;
}

ExtElement CyclicKummerLocal::inverse(const ExtElement& x) const {
  check(x);
  // Accumulate the norm in the same order as norm_cyclic, so both agree on
  // whether it vanishes under the pessimistic precision model.
  ExtElement others = one();
  ExtElement nx = x;
  for (std::uint32_t k = 1; k < n_; ++k) {
    const ExtElement c = sigma(x, k);
    others = mul(others, c);
    nx = mul(nx, c);
  }
  const LaurentSeries& nv = nx.coords[0];
  if (nv.is_zero()) throw Error(ErrorKind::PrecisionExhausted, "norm vanishes to working precision; element not invertible");
  return scale(others, nv.inverse());
}

bool CyclicKummerLocal::approx_equal(const ExtElement& x, const ExtElement& z) const {
  check(x);
  check(z);
  for (std::size_t i = 0; i < n_; ++i)
    if (!normtori::approx_equal(x.coords[i], z.coords[i])) return false;
  return true;
}

bool CyclicKummerLocal::is_scalar(const ExtElement& x) const {
  check(x);
  for (std::size_t i = 1; i < n_; ++i)
    if (!x.coords[i].is_zero()) return false;
  return true;
}

LaurentSeries norm_cyclic(const CyclicKummerLocal& ext, const ExtElement& x) {
  ExtElement acc = x;
  for (std::uint32_t k = 1; k < ext.degree(); ++k) acc = ext.mul(acc, ext.sigma(x, k));
  if (acc.coords[0].is_zero()) throw Error(ErrorKind::PrecisionExhausted, "norm is zero to working precision");
  return acc.coords[0];
}

std::uint64_t tame_symbol(const PrimeField& field, const LaurentSeries& f, const LaurentSeries& g, std::uint64_t n) {
  const std::int64_t vf = f.valuation();
  const std::int64_t vg = g.valuation();
  std::uint32_t r = field.mul(field.pow(f.leading(), vg), field.pow(g.leading(), -vf));
  if ((vf * vg) % 2 != 0) r = field.neg(r);
  return unit_class(field, r, n);
}

bool is_norm_cyclic(const CyclicKummerLocal& ext, const LaurentSeries& lambda) {
  return tame_symbol(ext.field(), ext.radicand(), lambda, ext.degree()) == 0;
}

}  // namespace normtori
