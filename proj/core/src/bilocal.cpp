#include "normtori/bilocal.hpp"

#include <algorithm>
#include <optional>

#include "normtori/errors.hpp"
#include "normtori/modarith.hpp"

namespace normtori {

BiLocalElement::BiLocalElement(std::uint32_t q, int v1, std::vector<LaurentSeries> coeffs)
    : q_(q), v1_(v1), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.modulus() != q_) throw Error(ErrorKind::IncompatibleModulus, "coefficient over a different field");
  normalize();
}

void BiLocalElement::normalize() {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  if (k == coeffs_.size()) {
    v1_ += static_cast<int>(k);
    coeffs_.clear();
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
  v1_ += static_cast<int>(k);
}

BiLocalElement BiLocalElement::monomial(std::uint32_t q, std::int64_t c, int s, int t, int prec1, int prec2) {
  if (prec1 < 1) throw Error(ErrorKind::InvalidArgument, "pi1 precision must be positive");
  std::vector<LaurentSeries> cs;
  cs.push_back(LaurentSeries::monomial(q, c, t, prec2));
  for (int i = 1; i < prec1; ++i) cs.push_back(LaurentSeries::zero(q, t + prec2));
  return BiLocalElement(q, s, std::move(cs));
}

BiLocalElement BiLocalElement::from_pi2_series(const LaurentSeries& c, int prec1) {
  std::vector<LaurentSeries> cs{c};
  for (int i = 1; i < prec1; ++i) cs.push_back(LaurentSeries::zero(c.modulus(), c.absolute_precision()));
  return BiLocalElement(c.modulus(), 0, std::move(cs));
}

int BiLocalElement::pi1_valuation() const {
  if (coeffs_.empty()) throw Error(ErrorKind::PrecisionExhausted, "element is zero to working precision");
  return v1_;
}

BiLocalElement BiLocalElement::operator*(const BiLocalElement& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return BiLocalElement(q_, v1_ + o.v1_, {});
  const std::size_t p = std::min(coeffs_.size(), o.coeffs_.size());
  std::vector<std::optional<LaurentSeries>> acc(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; i + j < p; ++j) {
      LaurentSeries t = coeffs_[i] * o.coeffs_[j];
      acc[i + j] = acc[i + j] ? *acc[i + j] + t : t;
    }
  std::vector<LaurentSeries> out;
  for (auto& a : acc) out.push_back(std::move(*a));
  return BiLocalElement(q_, v1_ + o.v1_, std::move(out));
}

BiLocalElement BiLocalElement::operator+(const BiLocalElement& o) const {
  // Known window in pi1 ends at the smaller absolute precision.
  const int end = std::min(v1_ + pi1_precision(), o.v1_ + o.pi1_precision());
  const int lo = std::min(v1_, o.v1_);
  std::vector<LaurentSeries> out;
  for (int k = lo; k < end; ++k) {
    std::optional<LaurentSeries> s;
    if (k >= v1_) s = coeffs_[static_cast<std::size_t>(k - v1_)];
    if (k >= o.v1_) {
      const auto& c = o.coeffs_[static_cast<std::size_t>(k - o.v1_)];
      s = s ? *s + c : c;
    }
    out.push_back(std::move(*s));
  }
  return BiLocalElement(q_, lo, std::move(out));
}

BiLocalElement BiLocalElement::pow(std::uint64_t e) const {
  if (e == 0) {
    const int p2 = coeffs_.empty() ? 1 : coeffs_.front().precision();
    return monomial(q_, 1, 0, 0, std::max(1, pi1_precision()), std::max(1, p2));
  }
  std::optional<BiLocalElement> acc;
  BiLocalElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc ? *acc * base : base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return *acc;
}

BiLocalElement BiLocalElement::scaled(const LaurentSeries& c) const {
  std::vector<LaurentSeries> out;
  for (const auto& x : coeffs_) out.push_back(x * c);
  return BiLocalElement(q_, v1_, std::move(out));
}

bool approx_equal(const BiLocalElement& a, const BiLocalElement& b) {
  const int end = std::min(a.pi1_valuation() + a.pi1_precision(), b.pi1_valuation() + b.pi1_precision());
  const int lo = std::min(a.pi1_valuation(), b.pi1_valuation());
  for (int k = lo; k < end; ++k) {
    const bool in_a = k >= a.pi1_valuation();
    const bool in_b = k >= b.pi1_valuation();
    if (in_a && in_b) {
      if (!approx_equal(a.coefficients()[static_cast<std::size_t>(k - a.pi1_valuation())],
                        b.coefficients()[static_cast<std::size_t>(k - b.pi1_valuation())]))
        return false;
    } else {
      const auto& c = in_a ? a.coefficients()[static_cast<std::size_t>(k - a.pi1_valuation())]
                           : b.coefficients()[static_cast<std::size_t>(k - b.pi1_valuation())];
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

MonomialNormalForm monomial_normal_form(const BiLocalElement& x, std::uint64_t m) {
  const std::uint32_t q = x.modulus();
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  if (m % q == 0) throw Error(ErrorKind::WildCharacteristic, "exponent divisible by the characteristic");
  const int s = x.pi1_valuation();
  const LaurentSeries& lead = x.coefficients().front();
  const int t = lead.valuation();
  const std::uint32_t u = lead.leading();

  // y = x / (u pi1^s pi2^t), a pi1-power series with y_0 of residue 1.
  const LaurentSeries unit_inv = LaurentSeries::monomial(q, zq::inv(u, q), -t, lead.precision());
  std::vector<LaurentSeries> y;
  for (const auto& c : x.coefficients()) y.push_back(c * unit_inv);

  // b^m = y solved coefficient by coefficient: b_k enters (b^m)_k as m b_0^{m-1} b_k.
  std::vector<LaurentSeries> b{hensel_nth_root(y.front(), m)};
  const LaurentSeries denom = (b.front().pow(static_cast<std::int64_t>(m - 1)).scaled(static_cast<std::uint32_t>(m % q))).inverse();
  for (std::size_t k = 1; k < y.size(); ++k) {
    std::vector<LaurentSeries> partial = b;
    partial.push_back(LaurentSeries::zero(q, y[k].absolute_precision()));
    const BiLocalElement pk(q, 0, partial);
    const BiLocalElement pm = pk.pow(m);
    LaurentSeries have = LaurentSeries::zero(q, y[k].absolute_precision());
    if (pm.pi1_precision() > 0 && static_cast<int>(k) >= pm.pi1_valuation() &&
        static_cast<int>(k) < pm.pi1_valuation() + pm.pi1_precision())
      have = pm.coefficients()[k - static_cast<std::size_t>(pm.pi1_valuation())];
    b.push_back((y[k] - have) * denom);
  }
  return {u, s, t, BiLocalElement(q, 0, std::move(b))};
}

BiLocalElement recompose_normal_form(const MonomialNormalForm& nf, std::uint64_t m) {
  const std::uint32_t q = nf.b.modulus();
  const BiLocalElement bm = nf.b.pow(m);
  const int p2 = bm.coefficients().empty() ? 1 : bm.coefficients().front().precision();
  const BiLocalElement mono = BiLocalElement::monomial(q, nf.u, nf.s, nf.t, bm.pi1_precision(), p2);
  return mono * bm;
}

}  // namespace normtori
