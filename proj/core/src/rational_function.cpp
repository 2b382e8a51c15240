#include "normtori/rational_function.hpp"

#include <cctype>
#include <sstream>

#include "normtori/errors.hpp"
#include "normtori/modarith.hpp"

namespace normtori {

Poly2 Poly2::constant(std::uint32_t q, std::int64_t c) {
  Poly2 p(q);
  p.add_term(0, 0, zq::reduce(c, q));
  return p;
}

Poly2 Poly2::x(std::uint32_t q) {
  Poly2 p(q);
  p.add_term(1, 0, 1);
  return p;
}

Poly2 Poly2::y(std::uint32_t q) {
  Poly2 p(q);
  p.add_term(0, 1, 1);
  return p;
}

void Poly2::add_term(int i, int j, std::uint32_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::make_pair(i, j), c);
  if (fresh) return;
  it->second = zq::add(it->second, c, q_);
  if (it->second == 0) terms_.erase(it);
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, zq::neg(c, q_));
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r(q_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(a.first + b.first, a.second + b.second, zq::mul(ca, cb, q_));
  return r;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 r = constant(q_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::uint32_t Poly2::evaluate(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t s = 0;
  for (const auto& [k, c] : terms_)
    s = zq::add(s, zq::mul(c, zq::mul(zq::pow(a, static_cast<std::uint64_t>(k.first), q_), zq::pow(b, static_cast<std::uint64_t>(k.second), q_), q_), q_), q_);
  return s;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (it->second != 1 || (i == 0 && j == 0)) {
      os << it->second;
      wrote = true;
    }
    auto var = [&](char v, int d) {
      if (d == 0) return;
      if (wrote) os << '*';
      os << v;
      if (d > 1) os << '^' << d;
      wrote = true;
    };
    var('x', i);
    var('y', j);
  }
  return os.str();
}

namespace {

Poly1 poly1_mul(const Poly1& a, const Poly1& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = zq::add(r[i + j], zq::mul(a[i], b[j], q), q);
  return r;
}

void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::uint32_t poly1_eval(const Poly1& p, std::uint32_t s, std::uint32_t q) {
  std::uint32_t r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = zq::add(zq::mul(r, s, q), *it, q);
  return r;
}

class ExprParser {
 public:
  ExprParser(std::string_view s, std::uint32_t q) : s_(s), q_(q) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "line 1, column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  RationalFunction constant(std::int64_t c) { return {Poly2::constant(q_, c), Poly2::constant(q_, 1)}; }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RationalFunction rhs = term();
      // a/b +- c/d = (ad +- cb) / bd
      Poly2 left = acc.num * rhs.den, right = rhs.num * acc.den;
      acc = {c == '+' ? left + right : left - right, acc.den * rhs.den};
    }
    return acc;
  }
  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        RationalFunction rhs = unary();
        if (c == '/') {
          if (rhs.num.is_zero()) {
            pos_ = at;
            fail("division by zero");
          }
          acc = rf_div(acc, rhs);
        } else {
          acc = rf_mul(acc, rhs);
        }
      } else if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = rf_mul(acc, unary());  // juxtaposition, as in xy(x+y-1)
      } else {
        return acc;
      }
    }
  }
  RationalFunction unary() {
    if (peek() == '-') {
      ++pos_;
      RationalFunction r = unary();
      r.num = Poly2::constant(q_, 0) - r.num;
      return r;
    }
    return power();
  }
  RationalFunction power() {
    RationalFunction base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
    unsigned e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(s_[pos_++] - '0');
      if (e > 64) fail("exponent too large");
    }
    return {base.num.pow(e), base.den.pow(e)};
  }
  RationalFunction primary() {
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      return {c == 'x' ? Poly2::x(q_) : Poly2::y(q_), Poly2::constant(q_, 1)};
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + (s_[pos_++] - '0')) % static_cast<std::int64_t>(q_);
      }
      return constant(v);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::uint32_t q_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly1 substitute_line(const Poly2& p, std::uint32_t ax, std::uint32_t bx, std::uint32_t ay, std::uint32_t by) {
  const std::uint32_t q = p.modulus();
  Poly1 r;
  const Poly1 lx{bx, ax}, ly{by, ay};
  for (const auto& [k, c] : p.terms()) {
    Poly1 t{c};
    for (int i = 0; i < k.first; ++i) t = poly1_mul(t, lx, q);
    for (int j = 0; j < k.second; ++j) t = poly1_mul(t, ly, q);
    if (r.size() < t.size()) r.resize(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = zq::add(r[i], t[i], q);
  }
  trim(r);
  return r;
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return {a.num * b.num, a.den * b.den}; }

RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
  if (b.num.is_zero()) throw Error(ErrorKind::ZeroInput, "division by the zero function");
  return {a.num * b.den, a.den * b.num};
}

RationalFunction parse_rational_function(std::string_view text, std::uint32_t q) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  return ExprParser(text, q).parse();
}

std::uint32_t rational_point_residue(const RationalFunction& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t q = f.num.modulus();
  const std::uint32_t d = f.den.evaluate(a % q, b % q);
  if (d == 0)
    throw Error(ErrorKind::PoleAtPoint, "denominator " + f.den.to_string() + " vanishes at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  return zq::mul(f.num.evaluate(a % q, b % q), zq::inv(d, q), q);
}

Line line_of(const Poly2& p) {
  if (p.total_degree() != 1) throw Error(ErrorKind::InvalidArgument, "curve " + p.to_string() + " is not a line");
  Line l{0, 0, 0};
  for (const auto& [k, c] : p.terms()) {
    if (k == std::make_pair(1, 0)) l.alpha = c;
    else if (k == std::make_pair(0, 1)) l.beta = c;
    else l.gamma = c;
  }
  return l;
}

bool restriction_is_constant(const RationalFunction& f, const Line& l, std::uint32_t& c) {
  const std::uint32_t q = f.num.modulus();
  std::uint32_t ax, bx, ay, by;
  if (l.beta != 0) {
    const std::uint32_t ib = zq::inv(l.beta, q);
    ax = 1;
    bx = 0;
    ay = zq::neg(zq::mul(l.alpha, ib, q), q);
    by = zq::neg(zq::mul(l.gamma, ib, q), q);
  } else {
    if (l.alpha == 0) throw Error(ErrorKind::InvalidArgument, "degenerate line");
    ax = 0;
    bx = zq::neg(zq::mul(l.gamma, zq::inv(l.alpha, q), q), q);
    ay = 1;
    by = 0;
  }
  const Poly1 N = substitute_line(f.num, ax, bx, ay, by);
  const Poly1 D = substitute_line(f.den, ax, bx, ay, by);
  if (D.empty()) return false;
  std::uint32_t s0 = 0;
  while (s0 < q && poly1_eval(D, s0, q) == 0) ++s0;
  if (s0 == q) return false;
  c = zq::mul(poly1_eval(N, s0, q), zq::inv(poly1_eval(D, s0, q), q), q);
  // N - c D must vanish identically.
  Poly1 diff(std::max(N.size(), D.size()), 0);
  for (std::size_t i = 0; i < N.size(); ++i) diff[i] = N[i];
  for (std::size_t i = 0; i < D.size(); ++i) diff[i] = zq::sub(diff[i], zq::mul(c, D[i], q), q);
  trim(diff);
  return diff.empty();
}

}  // namespace normtori
