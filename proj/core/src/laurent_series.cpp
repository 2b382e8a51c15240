#include "normtori/laurent_series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "normtori/errors.hpp"
#include "normtori/modarith.hpp"

namespace normtori {

LaurentSeries::LaurentSeries(std::uint32_t q, int valuation, std::vector<std::uint32_t> coeffs)
    : q_(q), val_(valuation), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= q_;
  normalize();
}

void LaurentSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c != 0; });
  auto skipped = static_cast<int>(first - coeffs_.begin());
  if (skipped == 0) return;
  coeffs_.erase(coeffs_.begin(), first);
  val_ += skipped;
}

LaurentSeries LaurentSeries::zero(std::uint32_t q, int absolute_precision) {
  return LaurentSeries(q, absolute_precision);
}

LaurentSeries LaurentSeries::constant(std::uint32_t q, std::int64_t c, int precision) {
  return monomial(q, c, 0, precision);
}

LaurentSeries LaurentSeries::monomial(std::uint32_t q, std::int64_t c, int k, int precision) {
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  std::vector<std::uint32_t> v(static_cast<std::size_t>(precision), 0);
  v[0] = zq::reduce(c, q);
  if (v[0] == 0) return zero(q, k + precision);
  return LaurentSeries(q, k, std::move(v));
}

int LaurentSeries::valuation() const {
  if (is_zero()) throw Error(ErrorKind::PrecisionExhausted, "series is zero to precision O(t^" + std::to_string(val_) + ")");
  return val_;
}

std::uint32_t LaurentSeries::leading() const {
  if (is_zero()) throw Error(ErrorKind::PrecisionExhausted, "leading term of a series known only as O(t^" + std::to_string(val_) + ")");
  return coeffs_.front();
}

std::uint32_t LaurentSeries::coeff(int k) const {
  if (k >= absolute_precision())
    throw Error(ErrorKind::PrecisionExhausted, "coefficient of t^" + std::to_string(k) + " is beyond O(t^" + std::to_string(absolute_precision()) + ")");
  if (k < val_) return 0;
  return coeffs_[static_cast<std::size_t>(k - val_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = zq::neg(c, q_);
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (o.q_ != q_) throw Error(ErrorKind::IncompatibleModulus, "adding series over different fields");
  const int abs = std::min(absolute_precision(), o.absolute_precision());
  int lo = abs;
  if (!is_zero()) lo = std::min(lo, val_);
  if (!o.is_zero()) lo = std::min(lo, o.val_);
  if (lo >= abs) {
    coeffs_.clear();
    val_ = abs;
    return *this;
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(abs - lo), 0);
  for (int k = lo; k < abs; ++k) {
    std::uint32_t a = (k >= val_ && k < absolute_precision()) ? coeffs_[static_cast<std::size_t>(k - val_)] : 0;
    std::uint32_t b = (k >= o.val_ && k < o.absolute_precision()) ? o.coeffs_[static_cast<std::size_t>(k - o.val_)] : 0;
    out[static_cast<std::size_t>(k - lo)] = zq::add(a, b, q_);
  }
  coeffs_ = std::move(out);
  val_ = lo;
  normalize();
  if (coeffs_.empty()) val_ = abs;
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
  if (o.q_ != q_) throw Error(ErrorKind::IncompatibleModulus, "multiplying series over different fields");
  if (is_zero() || o.is_zero()) {
    // O(t^N) * (c t^v + ...) = O(t^(N+v)); O(t^N) * O(t^M) = O(t^(N+M)).
    int abs = val_ + o.val_;
    coeffs_.clear();
    val_ = abs;
    return *this;
  }
  const std::size_t p = std::min(coeffs_.size(), o.coeffs_.size());
  std::vector<std::uint64_t> acc(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < p; ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % q_;
    }
  }
  std::vector<std::uint32_t> out(p);
  for (std::size_t i = 0; i < p; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  coeffs_ = std::move(out);
  val_ += o.val_;
  return *this;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw Error(ErrorKind::PrecisionExhausted, "inverting a series that is zero to precision");
  const std::size_t p = coeffs_.size();
  std::vector<std::uint32_t> r(p, 0);
  const std::uint32_t inv0 = zq::inv(coeffs_[0], q_);
  r[0] = inv0;
  for (std::size_t k = 1; k < p; ++k) {
    std::uint64_t s = 0;
    for (std::size_t i = 1; i <= k; ++i) s = (s + static_cast<std::uint64_t>(coeffs_[i]) * r[k - i]) % q_;
    r[k] = zq::mul(zq::neg(static_cast<std::uint32_t>(s), q_), inv0, q_);
  }
  return LaurentSeries(q_, -val_, std::move(r));
}

LaurentSeries LaurentSeries::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) {
    if (is_zero()) throw Error(ErrorKind::PrecisionExhausted, "zeroth power of a series that is zero to precision");
    return constant(q_, 1, precision());
  }
  LaurentSeries base = *this;
  std::optional<LaurentSeries> acc;
  while (e > 0) {
    if (e & 1) acc = acc ? *acc * base : base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return *acc;
}

LaurentSeries LaurentSeries::scaled(std::uint32_t c) const {
  c %= q_;
  if (c == 0) return zero(q_, absolute_precision());
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x = zq::mul(x, c, q_);
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  return r;
}

LaurentSeries LaurentSeries::truncated(int precision) const {
  LaurentSeries r = *this;
  if (precision < 0) precision = 0;
  if (r.coeffs_.size() > static_cast<std::size_t>(precision)) r.coeffs_.resize(static_cast<std::size_t>(precision));
  return r;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const int k = val_ + static_cast<int>(i);
    if (k == 0) {
      os << coeffs_[i];
      continue;
    }
    if (coeffs_[i] != 1) os << coeffs_[i] << '*';
    os << 't';
    if (k != 1) os << '^' << k;
  }
  if (!first) os << " + ";
  os << "O(t^" << absolute_precision() << ')';
  return os.str();
}

bool approx_equal(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_zero(); }

LaurentSeries hensel_nth_root(const LaurentSeries& z, std::uint64_t n) {
  const std::uint32_t q = z.modulus();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root degree must be positive");
  if (n % q == 0) throw Error(ErrorKind::WildCharacteristic, "root degree divisible by the characteristic");
  if (z.is_zero() || z.valuation() != 0 || z.leading() != 1)
    throw Error(ErrorKind::ResidueNotOne, "Hensel root needs a unit with residue 1");
  const int prec = z.precision();
  const std::uint32_t inv_n = zq::inv(static_cast<std::uint32_t>(n % q), q);
  std::vector<std::uint32_t> w(static_cast<std::size_t>(prec), 0);
  w[0] = 1;
  // w_k enters (w^n)_k linearly as n*w_k, so solve one coefficient at a time.
  for (int k = 1; k < prec; ++k) {
    LaurentSeries partial(q, 0, std::vector<std::uint32_t>(w.begin(), w.begin() + k + 1));
    const std::uint32_t have = partial.pow(static_cast<std::int64_t>(n)).coeff(k);
    w[static_cast<std::size_t>(k)] = zq::mul(zq::sub(z.coeff(k), have, q), inv_n, q);
  }
  return LaurentSeries(q, 0, std::move(w));
}

namespace {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, std::uint32_t q, int prec) : s_(text), q_(q), prec_(prec) {}

  LaurentSeries parse() {
    std::vector<std::pair<int, std::int64_t>> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    for (;;) {
      auto [k, c] = term();
      terms.emplace_back(k, negate ? -c : c);
      skip_ws();
      if (pos_ >= s_.size()) break;
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negate = op == '-';
      ++pos_;
    }
    int lo = terms.front().first;
    for (auto& t : terms) lo = std::min(lo, t.first);
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(prec_), 0);
    for (auto& [k, c] : terms) {
      if (k - lo >= prec_) continue;
      auto& slot = coeffs[static_cast<std::size_t>(k - lo)];
      slot = zq::add(slot, zq::reduce(c, q_), q_);
    }
    if (std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; }))
      return LaurentSeries::zero(q_, lo + prec_);
    return LaurentSeries(q_, lo, std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "line 1, column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  std::int64_t integer(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }
  std::pair<int, std::int64_t> term() {
    skip_ws();
    std::int64_t c = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = integer(false);
      skip_ws();
      if (peek() != '*') return {0, c};
      ++pos_;
      skip_ws();
    }
    if (peek() != 't') fail("expected 't' or a coefficient");
    ++pos_;
    skip_ws();
    int k = 1;
    if (peek() == '^') {
      ++pos_;
      std::int64_t e = integer(true);
      if (e > 1'000'000 || e < -1'000'000) fail("exponent out of range");
      k = static_cast<int>(e);
    }
    return {k, c};
  }

  std::string_view s_;
  std::uint32_t q_;
  int prec_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentSeries parse_series(std::string_view text, std::uint32_t q, int precision) {
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  return SeriesParser(text, q, precision).parse();
}

}  // namespace normtori
